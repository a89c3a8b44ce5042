#include "oracles.hpp"

#include <doctest.h>
#include <thhseg/errors.hpp>
#include <thhseg/steenrod.hpp>

#include <functional>

using namespace thhseg;

namespace {

// Conjugate ξ̄_k expanded over compositions (a_1..a_m) of k:
// Σ (−1)^m Π_i ξ_{a_i}^{p^{a_1+…+a_{i−1}}}, as exponent vectors over ξ_1..ξ_k.
std::map<std::vector<int>, std::int64_t> composition_formula(int k, std::int64_t p) {
    std::map<std::vector<int>, std::int64_t> out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            std::vector<int> exps(k, 0);
            int prefix = 0;
            for (int a : parts) {
                exps[a - 1] += static_cast<int>(oracle::ipow(p, prefix));
                prefix += a;
            }
            out[exps] += (parts.size() % 2 == 0) ? 1 : -1;
            return;
        }
        for (int a = 1; a <= remaining; ++a) {
            parts.push_back(a);
            rec(remaining - a);
            parts.pop_back();
        }
    };
    rec(k);
    for (auto it = out.begin(); it != out.end();)
        it = oracle::mod(it->second, p) == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<std::vector<int>, std::int64_t> as_exponents(const DualSteenrodAlgebra& A, const Element& milnor_form, int k) {
    std::map<std::vector<int>, std::int64_t> out;
    for (const auto& [m, c] : milnor_form.terms()) {
        std::vector<int> exps(k, 0);
        for (auto [g, e] : m.factors()) {
            const auto& name = A.milnor().table()[g].name;
            REQUIRE(name.rfind("xiM", 0) == 0);
            int idx = std::stoi(name.substr(3));
            REQUIRE(idx <= k);
            exps[idx - 1] = e;
        }
        out[exps] = c;
    }
    return out;
}

std::int64_t binom_mod(int n, int k, std::int64_t p) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return oracle::mod(r, p);
}

} // namespace

TEST_CASE("counit and primitive-plus-grouplike coproducts") {
    DualSteenrodAlgebra A(PrimeField(3), 60);
    const auto& C = A.conjugate();
    const auto& CC = A.conjugate_square();
    CHECK(CC.to_text(A.coproduct(C.one())) == "1 ⊗ 1");
    CHECK(A.coproduct(A.xibar(1)) == CC.algebra().add(CC.tensor(C.one(), A.xibar(1)), CC.tensor(A.xibar(1), C.one())));
    CHECK(CC.to_text(A.coproduct(A.xibar(1))) == "xi1 ⊗ 1 + 1 ⊗ xi1");
    CHECK(CC.to_text(A.coproduct(A.xibar(2))) == "xi1 ⊗ xi1^3 + xi2 ⊗ 1 + 1 ⊗ xi2");
    CHECK(CC.to_text(A.coproduct(A.taubar(0))) == "tau0 ⊗ 1 + 1 ⊗ tau0");
}

TEST_CASE("coproduct of xi1^p is the Frobenius image") {
    for (std::uint32_t p : {3U, 5U}) {
        DualSteenrodAlgebra A(PrimeField(p), 2 * static_cast<int>(p * p));
        const auto& C = A.conjugate();
        const auto& CC = A.conjugate_square();
        // binomial expansion of (1⊗x + x⊗1)^p with coefficients reduced mod p
        Element expected;
        for (unsigned j = 0; j <= p; ++j) {
            auto c = binom_mod(static_cast<int>(p), static_cast<int>(j), p);
            CC.algebra().axpy(expected, static_cast<Coeff>(c),
                              CC.tensor(C.power(A.xibar(1), j), C.power(A.xibar(1), p - j)));
        }
        CHECK(A.coproduct(C.power(A.xibar(1), p)) == expected);
        CHECK(expected.size() == 2);
    }
}

TEST_CASE("conjugate generators in the Milnor basis") {
    for (std::uint32_t p : {3U, 5U, 7U}) {
        DualSteenrodAlgebra A(PrimeField(p), 2 * static_cast<int>(p * p * p));
        const auto& M = A.milnor();
        CHECK(A.conjugate_to_milnor(1) == M.neg(A.xi(1)));
        CHECK(A.conjugate_to_milnor(2) == M.add(M.neg(A.xi(2)), M.power(A.xi(1), p + 1)));
        for (int k = 1; k <= 3; ++k)
            CHECK(as_exponents(A, A.conjugate_to_milnor(k), k) == [&] {
                auto f = composition_formula(k, p);
                for (auto& [e, c] : f)
                    c = oracle::mod(c, p);
                return f;
            }());
    }
    DualSteenrodAlgebra A(PrimeField(3), 20);
    CHECK(A.milnor().to_text(A.conjugate_to_milnor(2)) == "xiM1^4 - xiM2");
}

TEST_CASE("reduction mod J(0)") {
    DualSteenrodAlgebra A(PrimeField(3), 60);
    const auto& M = A.milnor();
    for (int k = 1; k <= 3; ++k) {
        auto r = static_cast<unsigned>((oracle::ipow(3, k) - 1) / 2);
        CHECK(A.reduce_mod_J0(A.conjugate_to_milnor(k)) == M.scale(M.power(A.xi(1), r), M.field().sign(k)));
    }
}

TEST_CASE("conjugation is an involution") {
    DualSteenrodAlgebra A(PrimeField(5), 60);
    const auto& C = A.conjugate();
    for (int d = 0; d <= 60; ++d)
        for (const auto& m : C.basis(d))
            CHECK(A.conjugation(A.conjugation(C.monomial(m))) == C.monomial(m));
}

TEST_CASE("dual Steenrod powers on small classes") {
    DualSteenrodAlgebra A(PrimeField(3), 60);
    const auto& C = A.conjugate();
    for (int d = 0; d <= 20; ++d)
        for (const auto& m : C.basis(d))
            CHECK(A.sp_lower(0, C.monomial(m)) == C.monomial(m));
    CHECK(A.sp_lower(1, A.xibar(1)) == C.scalar(-1));
    std::vector<unsigned> nonzero;
    for (unsigned r = 0; 4 * r <= 16; ++r)
        if (!A.sp_lower(r, A.xibar(2)).is_zero())
            nonzero.push_back(r);
    CHECK(nonzero == std::vector<unsigned>{0, 1, 4});
    CHECK(C.scale(A.sp_lower(4, A.xibar(2)), C.field().sign(4)) == C.one());
    CHECK(A.sp_lower(4, A.xibar(2)) == A.sp_lower_via_milnor(4, A.xibar(2)));

    std::vector<unsigned> nonzero_pow;
    Element x = C.power(A.xibar(1), 3);
    for (unsigned r = 0; 4 * r <= 12; ++r)
        if (!A.sp_lower(r, x).is_zero())
            nonzero_pow.push_back(r);
    CHECK(nonzero_pow == std::vector<unsigned>{0, 3});
}

TEST_CASE("closed forms for SP^r_* on xibar_k and xibar_{k-1}^p") {
    SUBCASE("p = 3, k ≤ 3") {
        DualSteenrodAlgebra A(PrimeField(3), 52);
        auto r1 = verify_sp_on_xibar(A, 3);
        auto r2 = verify_sp_on_xibar_power(A, 3);
        CHECK(r1.pass());
        CHECK(r2.pass());
        for (auto& l : r1.failure_lines())
            MESSAGE(l);
        // every admissible r is listed: Σ_k (⌊|ξ̄_k|/4⌋ + 1)
        CHECK(r1.checks().size() == (1 + 1) + (4 + 1) + (13 + 1));
    }
    SUBCASE("p = 5, k ≤ 2") {
        DualSteenrodAlgebra A(PrimeField(5), 48);
        CHECK(verify_sp_on_xibar(A, 2).pass());
        CHECK(verify_sp_on_xibar_power(A, 2).pass());
    }
    SUBCASE("k-max = 0 is vacuous and k-max = 1 on the power checks SP^0 only") {
        DualSteenrodAlgebra A(PrimeField(3), 20);
        CHECK(verify_sp_on_xibar(A, 0).checks().empty());
        auto r = verify_sp_on_xibar_power(A, 1);
        CHECK(r.checks().size() == 1);
        CHECK(r.pass());
    }
}

TEST_CASE("Hopf structure: coassociativity, counit, antipode, both SP routes") {
    DualSteenrodAlgebra A3(PrimeField(3), 52);
    auto r3 = verify_hopf_structure(A3, 52);
    for (auto& l : r3.failure_lines())
        MESSAGE(l);
    CHECK(r3.pass());
    DualSteenrodAlgebra A5(PrimeField(5), 48);
    CHECK(verify_hopf_structure(A5, 48).pass());
}

TEST_CASE("mutating one Milnor coefficient is detected") {
    DualSteenrodAlgebra A(PrimeField(3), 52);
    const auto& M = A.milnor();
    Element bad = M.add(A.conjugate_to_milnor(2), M.power(A.xi(1), 4));
    auto mutated = A.with_conjugate_override(2, bad);
    auto report = verify_sp_on_xibar(mutated, 2);
    CHECK_FALSE(report.pass());
    CHECK_FALSE(verify_hopf_structure(mutated, 20).pass());
}

TEST_CASE("cutoff errors") {
    DualSteenrodAlgebra A(PrimeField(3), 20);
    CHECK_THROWS_AS(A.xibar(3), TruncationError);
    CHECK_THROWS_AS(A.conjugate_to_milnor(3), TruncationError);
    const auto& C = A.conjugate();
    CHECK_THROWS_AS(A.coproduct(C.power(A.xibar(2), 2)), TruncationError);
}
