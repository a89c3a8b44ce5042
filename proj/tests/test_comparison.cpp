#include "oracles.hpp"

#include <doctest.h>
#include <thhseg/comparison.hpp>
#include <thhseg/errors.hpp>

#include <set>

using namespace thhseg;

namespace {

GenId gen(const HomologyModel& m, const char* name) { return *m.algebra().table().find(name); }

// exponent vectors over (m_1..m_L, s(m_1)..s(m_L)) with |m_ℓ| = 2ℓ, counted by a predicate
std::size_t count_keys(int ell_max, int max_degree, const std::function<bool(int alpha, int w, int r)>& keep) {
    std::size_t n = 0;
    std::vector<int> e(ell_max + 1, 0);
    std::function<void(int, int)> rec = [&](int ell, int deg) {
        if (ell > ell_max) {
            for (int mask = 0; mask < (1 << ell_max); ++mask) {
                int w = 0, r = 0;
                for (int b = 0; b < ell_max; ++b)
                    if (mask & (1 << b)) {
                        w += b + 1;
                        ++r;
                    }
                n += keep(deg, w, r);
            }
            return;
        }
        for (int k = 0; deg + 2 * ell * k <= max_degree; ++k)
            rec(ell + 1, deg + 2 * ell * k);
    };
    rec(1, 0);
    return n;
}

} // namespace

TEST_CASE("reindexing and sequences") {
    CHECK(segal_N(3, -10, 0) == -30);
    CHECK(segal_N(3, 0, 0) == 0);
    CHECK(segal_N(5, -2, 4) == -26);
    const auto mu = HomologyModel::mu(PrimeField(3), 3);
    std::vector<std::vector<int>> got;
    for (const auto& L : index_sequences(mu, 6, 0)) {
        std::vector<int> ells;
        for (const GenId g : L.generators)
            ells.push_back(mu.weight(g));
        got.push_back(ells);
    }
    std::set<std::vector<int>> expected = {{}, {1}, {2}, {3}, {1, 2}};
    CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expected);
    CHECK(got.size() == 5);
    CHECK(index_sequences(mu, -1, 0).empty());
    CHECK(index_sequences(mu, 6, 1).size() == 3);
}

TEST_CASE("gamma leading terms") {
    const Comparison mu(HomologyModel::mu(PrimeField(3), 8));
    const auto& T = mu.thh();
    CHECK(mu.page().to_text(mu.gamma_generator(gen(T, "s(m1)"))) == "-t^2 ⊗ m1^2*s(m1)");
    CHECK(mu.page().to_text(mu.gamma_generator(gen(T, "m1"))) == "-t^2 ⊗ m1^3");
    CHECK(mu.page().to_text(mu.gamma_generator(gen(T, "s(m2)"))) == "t^4 ⊗ m2^2*s(m2)");
    CHECK(mu.gamma(T.algebra().one()) == mu.page().algebra().one());
    CHECK(mu.gamma(T.algebra().multiply(T.algebra().generator("s(m1)"), T.algebra().generator("s(m2)"))) ==
          mu.page().algebra().multiply(mu.gamma_generator(gen(T, "s(m1)")), mu.gamma_generator(gen(T, "s(m2)"))));

    const Comparison bp(HomologyModel::bp(PrimeField(3), 2));
    CHECK(bp.page().to_text(bp.gamma_generator(gen(bp.thh(), "s(xi1)"))) == "t^4 ⊗ xi1^2*s(xi1)");
    CHECK(bp.page().to_text(bp.gamma_generator(gen(bp.thh(), "s(xi2)"))) == "t^16 ⊗ xi2^2*s(xi2)");

    const auto d = bp.gamma_first_principles(gen(bp.thh(), "s(xi2)"));
    CHECK(d.value == bp.gamma_generator(gen(bp.thh(), "s(xi2)")));
    CHECK(d.corrections.size() == 2);
    for (const auto& c : d.corrections)
        CHECK(c.is_zero());
    CHECK(d.report.pass());
    CHECK_THROWS_AS(bp.gamma_first_principles(gen(bp.thh(), "xi1")), ContractViolation);
    CHECK_THROWS_AS(Comparison(HomologyModel::bp(PrimeField(3), 1).thh()), ContractViolation);

    for (const std::uint32_t p : {3u, 5u}) {
        for (const auto& base : {HomologyModel::mu(PrimeField(p), p == 3 ? 8 : 4),
                                 HomologyModel::bp(PrimeField(p), p == 3 ? 3 : 2)}) {
            const auto rep = verify_gamma(Comparison(base));
            for (const auto& line : rep.failure_lines())
                MESSAGE(line);
            CHECK(rep.pass());
        }
    }
}

TEST_CASE("f and g on basis monomials") {
    const Comparison C(HomologyModel::mu(PrimeField(3), 3));
    const auto& T = C.thh();
    const auto key = [&](std::initializer_list<std::pair<const char*, int>> f) {
        std::vector<Monomial::Factor> fs;
        for (const auto& [n, e] : f)
            fs.emplace_back(gen(T, n), e);
        return Monomial::from_factors(fs);
    };
    const Monomial m1cube = C.source().lift(1, 1, key({{"m1", 1}}));
    CHECK(C.powers().to_text(C.f(m1cube)) == "u*t ⊗ P(m1)");
    CHECK(C.page().to_text(C.g(m1cube)) == "u*t ⊗ m1^3");

    const Element f1 = C.f(C.source().lift(0, 0, key({{"s(m1)", 1}})));
    CHECK(C.powers().to_text(f1) == "t^3 ⊗ P(s(m1))");
    CHECK(C.powers().filtration(f1.terms().begin()->first) == -6);
    const Element f12 = C.f(C.source().lift(0, 0, key({{"s(m1)", 1}, {"s(m2)", 1}})));
    CHECK(C.powers().to_text(f12) == "t^8 ⊗ P(s(m1))*P(s(m2))");
    CHECK(C.powers().filtration(f12.terms().begin()->first) == -16);

    const Element g1 = C.g(C.source().lift(0, 0, key({{"s(m1)", 1}})));
    CHECK(C.page().to_text(g1) == "-t^2 ⊗ m1^2*s(m1)");
    const Element g12 = C.g(C.source().lift(0, 0, key({{"s(m1)", 1}, {"s(m2)", 1}})));
    CHECK(C.page().bidegree(g12.terms().begin()->first) == std::pair{-12, 20});
    CHECK(g12.size() == 1);

    // φ, ψ invert f, g summand-wise
    for (const auto& x : T.bases(20))
        for (const auto& m : x)
            for (int i = 0; i <= 1; ++i) {
                const Monomial s = C.source().lift(i, -3, m);
                const Element fs = C.f(s);
                const auto& [z, c] = *fs.terms().begin();
                CHECK(C.phi(z) == C.source().algebra().monomial(s, C.source().algebra().field().inv(c)));
                const Element gs = C.g(s);
                const auto& [y, e] = *gs.terms().begin();
                CHECK(C.psi(y) == C.source().algebra().monomial(s, C.source().algebra().field().inv(e)));
                CHECK(C.key_of_page(y) == m);
            }
    CHECK_THROWS_AS(C.key_of_page(C.page().lift(0, 0, key({{"m1", 1}}))), ContractViolation);
}

TEST_CASE("Segal suite on a small window") {
    const Comparison C(HomologyModel::mu(PrimeField(3), 3));
    SegalOptions o;
    o.degree_max = 16;
    o.floor = -8;
    o.composite_span = 6;
    const auto rep = verify_segal(C, o);
    for (const auto& line : rep.failure_lines())
        MESSAGE(line);
    CHECK(rep.pass());

    // dims of F^n against independent counts
    const auto& dims = rep.dims().at("segal/mu/p3/dims");
    for (int n = -8; n <= 0; ++n) {
        const auto& row = dims.at("n" + std::to_string(n));
        for (int d = n; d <= 16; ++d) {
            const std::size_t j = static_cast<std::size_t>(d - n);
            const int b = d - n;
            CHECK(row.at("T")[j] == count_keys(3, 80, [&](int a, int w, int r) { return 3 * (a + 2 * w + r) <= b; }));
            CHECK(row.at("G")[j] == count_keys(3, 80, [&](int a, int w, int r) { return 3 * a + 6 * w + r <= b; }));
            CHECK(row.at("S")[j] == count_keys(3, 80, [&](int a, int w, int r) { return 3 * a + 2 * w + r <= b; }));
        }
    }

    SegalOptions threaded = o;
    threaded.threads = 3;
    CHECK(verify_segal(C, threaded).to_json().dump() == rep.to_json().dump());

    const Comparison R(HomologyModel::mu(PrimeField(3), 3), UnitPolicy{UnitPolicy::Mode::Random, 7});
    CHECK(verify_segal(R, o).pass());

    SegalOptions shifted = o;
    shifted.reindex_shift = 1;
    CHECK_FALSE(verify_segal(C, shifted).pass());

    SegalOptions bad = o;
    bad.floor = 2;
    CHECK_THROWS_AS(verify_segal(C, bad), ConfigError);
    SegalOptions tiny = o;
    tiny.budget.max_basis = 10;
    CHECK_THROWS_AS(verify_segal(C, tiny), ResourceError);
}

TEST_CASE("Segal suite for BP and p = 5") {
    SegalOptions o;
    o.degree_max = 24;
    o.floor = -10;
    o.composite_span = 6;
    for (const auto& base : {HomologyModel::bp(PrimeField(3), 2), HomologyModel::mu(PrimeField(5), 2)}) {
        const auto rep = verify_segal(Comparison(base), o);
        for (const auto& line : rep.failure_lines())
            MESSAGE(line);
        CHECK(rep.pass());
    }
}
