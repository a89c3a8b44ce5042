#pragma once

#include <cstddef>
#include <string>

namespace thhseg {

/// Upper bound on the number of basis elements a single computation may hold.
struct Budget {
    std::size_t max_basis = 4'000'000;

    /// Throws ResourceError when count exceeds the bound.
    void check(std::size_t count, const std::string& what) const;

    /// Default budget, overridden by THHSEG_MAX_BASIS when set; ConfigError
    /// on a malformed value.
    static Budget from_env();
};

} // namespace thhseg
