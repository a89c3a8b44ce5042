#pragma once

#include "thhseg/budget.hpp"
#include "thhseg/models.hpp"
#include "thhseg/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thhseg {

struct RunConfig {
    std::uint32_t p = 3;
    /// Unset: suites that take a spectrum run both MU and BP.
    std::optional<Spectrum> spectrum;
    int ell_max = 3;
    /// Unset: 3 for p = 3, 2 otherwise.
    std::optional<int> k_max;
    /// Total-degree bound (Tate window and Segal cells).
    std::optional<int> degree_max;
    /// Lowest filtration (Tate window s_min and Segal floor).
    int floor = -24;
    /// Unset: composite pro-inverse checks on every cell of the window.
    std::optional<int> composite_span;
    std::uint64_t seed = 1;
    bool random_units = false;
    unsigned threads = 1;
    Budget budget{};
    /// Segal probe: compares against N(n, d) + shift; nonzero shifts must fail.
    int reindex_shift = 0;

    int resolved_k_max() const { return k_max.value_or(p == 3 ? 3 : 2); }
    std::vector<Spectrum> spectra() const;
    /// Throws ConfigError for an even or composite p, empty windows and the like.
    void validate() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// steenrod, singer, tate, kappa, gamma, segal, hochschild, or all.
VerificationReport run_suite(const std::string& suite, const RunConfig& config);

} // namespace thhseg
