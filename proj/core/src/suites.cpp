#include "thhseg/suites.hpp"

#include "thhseg/comparison.hpp"
#include "thhseg/errors.hpp"
#include "thhseg/hochschild.hpp"
#include "thhseg/singer.hpp"
#include "thhseg/steenrod.hpp"
#include "thhseg/tate_ss.hpp"

#include <algorithm>

namespace thhseg {

std::vector<Spectrum> RunConfig::spectra() const {
    if (spectrum)
        return {*spectrum};
    return {Spectrum::MU, Spectrum::BP};
}

void RunConfig::validate() const {
    (void)PrimeField(p);
    if (ell_max < 1)
        throw ConfigError("ell-max must be at least 1");
    if (resolved_k_max() < 1)
        throw ConfigError("k-max must be at least 1");
    if (floor > 0)
        throw ConfigError("the filtration floor must be <= 0");
    if (degree_max && *degree_max < floor)
        throw ConfigError("degree window is empty");
    if (composite_span && *composite_span < 0)
        throw ConfigError("composite span must be >= 0");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"all",   "steenrod", "singer", "tate",
                                                   "kappa", "gamma",    "segal",  "hochschild"};
    return names;
}

namespace {

HomologyModel base_model(const RunConfig& c, Spectrum s, int mu_ell_max) {
    const PrimeField F(c.p);
    return s == Spectrum::MU ? HomologyModel::mu(F, mu_ell_max) : HomologyModel::bp(F, c.resolved_k_max());
}

VerificationReport steenrod_suite(const RunConfig& c) {
    const int k = c.resolved_k_max();
    int D = 1;
    for (int i = 0; i < k; ++i)
        D *= static_cast<int>(c.p);
    D = 2 * (D - 1);
    DualSteenrodAlgebra A(PrimeField(c.p), D);
    VerificationReport rep;
    rep.merge(verify_sp_on_xibar(A, k));
    rep.merge(verify_sp_on_xibar_power(A, k));
    rep.merge(verify_hopf_structure(A, D));
    return rep;
}

VerificationReport singer_suite(const RunConfig& c) {
    const PrimeField F(c.p);
    VerificationReport rep;
    const SingerConstruction bp(HomologyModel::bp(F, c.resolved_k_max()));
    for (int k = 1; k <= c.resolved_k_max(); ++k)
        rep.merge(verify_epsilon_correction(bp, k));
    const UnitPolicy units{c.random_units ? UnitPolicy::Mode::Random : UnitPolicy::Mode::One, c.seed};
    for (const auto s : c.spectra()) {
        const HomologyModel base = base_model(c, s, c.ell_max);
        rep.merge(verify_epsilon(SingerConstruction(base, units), 24));
        rep.merge(verify_epsilon(SingerConstruction(base.thh(), units), 16));
    }
    return rep;
}

VerificationReport tate_suite(const RunConfig& c) {
    VerificationReport rep;
    const TateWindow w{c.floor, 0, c.floor, c.degree_max.value_or(48)};
    TateSuiteOptions o;
    o.seed = c.seed;
    for (const auto s : c.spectra()) {
        const HomologyModel thh = base_model(c, s, c.ell_max).thh();
        std::size_t cells = 0;
        for (const auto& [s0, t] : w.padded(2, 1).bidegrees())
            cells += thh.algebra().basis(t).size();
        c.budget.check(cells, "Tate window");
        rep.merge(verify_tate(thh, w, o));
    }
    return rep;
}

VerificationReport kappa_suite(const RunConfig& c) {
    VerificationReport rep;
    for (const auto s : c.spectra())
        rep.merge(verify_kappa_omega(base_model(c, s, c.ell_max).thh(), 24, -4, 4));
    return rep;
}

VerificationReport gamma_suite(const RunConfig& c) {
    VerificationReport rep;
    const UnitPolicy units{c.random_units ? UnitPolicy::Mode::Random : UnitPolicy::Mode::One, c.seed};
    // MU at least up to m_{p^2-1}
    const int mu_ell = std::max(c.ell_max, static_cast<int>(c.p * c.p) - 1);
    for (const auto s : c.spectra())
        rep.merge(verify_gamma(Comparison(base_model(c, s, mu_ell), units)));
    return rep;
}

VerificationReport segal_suite(const RunConfig& c) {
    VerificationReport rep;
    const UnitPolicy units{c.random_units ? UnitPolicy::Mode::Random : UnitPolicy::Mode::One, c.seed};
    SegalOptions o;
    o.degree_max = c.degree_max.value_or(40);
    o.floor = c.floor;
    o.composite_span = c.composite_span.value_or(o.degree_max - o.floor);
    o.threads = c.threads;
    o.budget = c.budget;
    o.reindex_shift = c.reindex_shift;
    for (const auto s : c.spectra())
        rep.merge(verify_segal(Comparison(base_model(c, s, c.ell_max), units), o));
    return rep;
}

VerificationReport hochschild_suite(const RunConfig& c) {
    return verify_hochschild_polynomial(PrimeField(c.p), 2, 10, c.budget);
}

} // namespace

VerificationReport run_suite(const std::string& suite, const RunConfig& config) {
    config.validate();
    if (suite == "steenrod")
        return steenrod_suite(config);
    if (suite == "singer")
        return singer_suite(config);
    if (suite == "tate")
        return tate_suite(config);
    if (suite == "kappa")
        return kappa_suite(config);
    if (suite == "gamma")
        return gamma_suite(config);
    if (suite == "segal")
        return segal_suite(config);
    if (suite == "hochschild")
        return hochschild_suite(config);
    if (suite == "all") {
        VerificationReport rep;
        for (const auto& name : suite_names())
            if (name != "all")
                rep.merge(run_suite(name, config));
        return rep;
    }
    throw ConfigError("unknown suite '" + suite + "'");
}

} // namespace thhseg
