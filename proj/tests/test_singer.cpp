#include "oracles.hpp"

#include <doctest.h>
#include <thhseg/errors.hpp>
#include <thhseg/singer.hpp>

#include <set>
#include <tuple>

using namespace thhseg;

namespace {

// Σ_{i=0}^{k} t^{−(p^i−1)} ⊗ ξ̄_{k−i}^{p^i}, the expanded form of ε_*(ξ̄_k).
Element epsilon_xibar_closed_form(const SingerConstruction& S, int k) {
    const auto& M = S.model().algebra();
    const auto p = S.p();
    Element out;
    for (int i = 0; i <= k; ++i) {
        const auto q = static_cast<unsigned>(oracle::ipow(p, i));
        const Element x = M.power(S.xibar(k - i), q);
        out = S.classes().algebra().add(out, S.classes().lift(0, -static_cast<int>(q - 1), x));
    }
    return out;
}

} // namespace

TEST_CASE("epsilon on primitive and xibar generators") {
    const PrimeField F(3);
    SingerConstruction mu(HomologyModel::mu(F, 8));
    const auto& M = mu.model().algebra();
    const auto& T = mu.classes();
    CHECK(T.to_text(mu.epsilon(M.generator("m1"))) == "1 ⊗ m1");
    CHECK(mu.epsilon(M.generator("m1")) == T.lift(0, 0, M.generator("m1")));
    CHECK(mu.epsilon(M.generator("m2")) == T.algebra().add(T.lift(0, 0, M.generator("m2")),
                                                          T.lift(0, -2, M.one())));
    CHECK(mu.epsilon(M.generator("m8")) == epsilon_xibar_closed_form(mu, 2));
    CHECK(mu.epsilon(M.one()) == T.lift(0, 0, M.one()));

    for (std::uint32_t p : {3u, 5u}) {
        const int kmax = p == 3 ? 3 : 2;
        SingerConstruction bp(HomologyModel::bp(PrimeField(p), kmax));
        for (int k = 1; k <= kmax; ++k) {
            const Element e = bp.epsilon(bp.xibar(k));
            CHECK(e == epsilon_xibar_closed_form(bp, k));
            CHECK(e.size() == static_cast<std::size_t>(k + 1));
        }
    }
}

TEST_CASE("correction identity for epsilon(xibar_k)") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const int kmax = p == 3 ? 3 : 2;
        SingerConstruction bp(HomologyModel::bp(PrimeField(p), kmax));
        for (int k = 1; k <= kmax; ++k)
            CHECK(verify_epsilon_correction(bp, k).pass());
        CHECK_THROWS_AS(verify_epsilon_correction(bp, kmax + 1), RangeError);
        CHECK_THROWS_AS(verify_epsilon_correction(bp, 0), RangeError);
    }
    SingerConstruction mu(HomologyModel::mu(PrimeField(3), 8));
    CHECK(verify_epsilon_correction(mu, 2).pass());
    CHECK_THROWS_AS(verify_epsilon_correction(mu, 3), RangeError);
}

TEST_CASE("Tate representatives") {
    SingerConstruction mu(HomologyModel::mu(PrimeField(3), 3));
    const auto& M = mu.model().algebra();
    const auto& R = mu.representatives();
    const Element rep = mu.representative(mu.singer_class(0, 0, M.generator("m1")));
    REQUIRE(rep.size() == 1);
    const auto& [m, c] = *rep.terms().begin();
    CHECK(R.to_text(rep) == "-t^2 ⊗ P(m1)");
    CHECK(R.filtration(m) == -4);
    CHECK(R.algebra().degree(m) == 2);
    CHECK(mu.representative(mu.singer_class(0, 0, M.one())) == R.algebra().one());

    // sign (−1)^ℓ and shift (p−1)ℓ on every monomial, degree preserved
    for (const std::uint32_t p : {3u, 5u}) {
        SingerConstruction bp(HomologyModel::bp(PrimeField(p), 2));
        const auto& B = bp.model().algebra();
        for (int d = 0; d <= 40; d += 2)
            for (const auto& a : B.basis(d))
                for (int i = 0; i <= 1; ++i)
                    for (int r = -3; r <= 3; ++r) {
                        const Element x = bp.singer_class(i, r, B.monomial(a));
                        const Element y = bp.representative(x);
                        const auto& [ym, yc] = *y.terms().begin();
                        const int ell = d / 2;
                        CHECK(bp.representatives().t_exponent(ym) == r + static_cast<int>(p - 1) * ell);
                        CHECK(bp.representatives().algebra().degree(ym) == bp.degree(x.terms().begin()->first));
                        CHECK(yc == (ell % 2 ? p - 1 : 1));
                        CHECK(bp.representatives().filtration(ym) == bp.filtration(x.terms().begin()->first));
                    }
    }

    SingerConstruction thh(HomologyModel::mu(PrimeField(3), 3).thh());
    const auto& N = thh.model().algebra();
    CHECK_THROWS_AS(thh.representative(thh.singer_class(0, 0, N.generator("s(m1)"))), UnsupportedCase);
    CHECK_THROWS_AS(thh.epsilon(N.multiply(N.generator("m1"), N.generator("s(m1)"))), UnsupportedCase);
    CHECK(thh.epsilon(N.generator("s(m2)")) == thh.singer_class(0, 0, N.generator("s(m2)")));
    const Element sr = thh.sigma_representative(*N.table().find("s(m1)"));
    CHECK(thh.representatives().to_text(sr) == "t^3 ⊗ P(s(m1))");
    CHECK(thh.representatives().bidegree(sr.terms().begin()->first) == std::pair{-6, 9});
}

TEST_CASE("opaque units") {
    UnitPolicy ones;
    UnitPolicy rnd{UnitPolicy::Mode::Random, 42};
    std::set<Coeff> seen;
    for (GenId g = 0; g < 50; ++g) {
        CHECK(ones.unit(g, 7) == 1);
        const Coeff u = rnd.unit(g, 7);
        CHECK(u >= 1);
        CHECK(u <= 6);
        CHECK(u == rnd.unit(g, 7));
        seen.insert(u);
    }
    CHECK(seen.size() > 1);
}

TEST_CASE("filtration quotients") {
    SingerConstruction bp(HomologyModel::bp(PrimeField(3), 1));
    const auto& B = bp.model().algebra();
    CHECK(bp.degree(bp.singer_class(0, -2, B.one()).terms().begin()->first) == 4);

    // brute force over (i, r, e) with |ξ̄_1| = 4, filtration of the representative
    for (int d = -6; d <= 30; ++d)
        for (int n = -20; n <= 4; ++n) {
            std::set<std::tuple<int, int, int>> expected;
            for (int e = 0; e <= 20; ++e)
                for (int i = 0; i <= 1; ++i)
                    for (int r = -40; r <= 40; ++r)
                        if (4 * e - i - 2 * r == d && d - 12 * e >= n)
                            expected.emplace(i, r, e);
            const auto q = bp.quotient(d, n);
            std::set<std::tuple<int, int, int>> got;
            for (const auto& c : q.basis)
                got.emplace(bp.classes().u_exponent(c), bp.classes().t_exponent(c),
                            bp.classes().model_part(c).exponent(0));
            CHECK(got == expected);
        }
    const auto q = bp.quotient(4, -8);
    CHECK(q.dim() == 2);
    CHECK(bp.quotient(0, -3).dim() == 1);

    const auto big = bp.quotient(4, -20);
    const auto small = bp.quotient(4, -8);
    const auto S = structural_surjection(big, small);
    CHECK(S.rows() == 2);
    CHECK(S.nonzeros() == 2);
    CHECK_THROWS_AS(structural_surjection(small, big), ContractViolation);
}

TEST_CASE("epsilon suites") {
    for (std::uint32_t p : {3u, 5u}) {
        const PrimeField F(p);
        for (const auto& model : {HomologyModel::mu(F, p == 3 ? 8 : 4), HomologyModel::bp(F, 2),
                                  HomologyModel::mu(F, 3).thh()}) {
            const auto rep = verify_epsilon(SingerConstruction(model), 24);
            for (const auto& line : rep.failure_lines())
                MESSAGE(line);
            CHECK(rep.pass());
        }
    }
}
