#include <doctest.h>
#include <thhseg/errors.hpp>
#include <thhseg/hochschild.hpp>
#include <thhseg/suites.hpp>

#include <cstdlib>

using namespace thhseg;

TEST_CASE("budget from the environment") {
    ::unsetenv("THHSEG_MAX_BASIS");
    CHECK(Budget::from_env().max_basis == Budget{}.max_basis);
    ::setenv("THHSEG_MAX_BASIS", "", 1);
    CHECK(Budget::from_env().max_basis == Budget{}.max_basis);
    ::setenv("THHSEG_MAX_BASIS", "1234", 1);
    CHECK(Budget::from_env().max_basis == 1234);
    for (const char* bad : {"abc", "-5", "0", "12x"}) {
        ::setenv("THHSEG_MAX_BASIS", bad, 1);
        CHECK_THROWS_AS(Budget::from_env(), ConfigError);
    }
    ::unsetenv("THHSEG_MAX_BASIS");
}

TEST_CASE("Hochschild suite against P(x) ⊗ E(σx)") {
    const auto rep = verify_hochschild_polynomial(PrimeField(3), 2, 10);
    CHECK(rep.pass());
    CHECK(rep.checks().size() == 12);
    CHECK(verify_hochschild_polynomial(PrimeField(5), 4, 12).pass());
    CHECK_THROWS_AS(verify_hochschild_polynomial(PrimeField(3), 3, 10), ConfigError);
    CHECK_THROWS_AS(verify_hochschild_polynomial(PrimeField(3), 2, 10, Budget{5}), ResourceError);
}

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.p = 2;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.p = 9;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.floor = 3;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.degree_max = -30;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.ell_max = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    CHECK_THROWS_AS(run_suite("nope", RunConfig{}), ConfigError);
    CHECK(RunConfig{}.resolved_k_max() == 3);
    RunConfig five;
    five.p = 5;
    CHECK(five.resolved_k_max() == 2);
}

TEST_CASE("small suites pass and are deterministic") {
    RunConfig c;
    c.spectrum = Spectrum::BP;
    c.k_max = 2;
    c.degree_max = 20;
    c.floor = -10;
    for (const char* s : {"steenrod", "singer", "tate", "kappa", "gamma", "segal", "hochschild"}) {
        const auto a = run_suite(s, c);
        CHECK_MESSAGE(a.pass(), s);
        CHECK_MESSAGE(!a.checks().empty(), s);
        CHECK(a.to_json().dump() == run_suite(s, c).to_json().dump());
    }
    c.reindex_shift = 1;
    CHECK_FALSE(run_suite("segal", c).pass());
}

TEST_CASE("segal budget") {
    RunConfig c;
    c.spectrum = Spectrum::MU;
    c.budget = Budget{50};
    CHECK_THROWS_AS(run_suite("segal", c), ResourceError);
    CHECK_THROWS_AS(run_suite("tate", c), ResourceError);
}
