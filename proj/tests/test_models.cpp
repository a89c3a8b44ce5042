#include "oracles.hpp"

#include <doctest.h>
#include <thhseg/errors.hpp>
#include <thhseg/models.hpp>

using namespace thhseg;

namespace {

// Poincaré series of P(even) ⊗ E(odd), truncated.
std::vector<std::size_t> series(const std::vector<int>& even, const std::vector<int>& odd, int max_degree) {
    std::vector<std::size_t> dims(max_degree + 1, 0);
    dims[0] = 1;
    for (int d : even)
        for (int k = d; k <= max_degree; ++k)
            dims[k] += dims[k - d];
    for (int d : odd)
        for (int k = max_degree; k >= d; --k)
            dims[k] += dims[k - d];
    return dims;
}

} // namespace

TEST_CASE("coaction on H_*(MU) at p = 3") {
    auto mu = HomologyModel::mu(PrimeField(3), 8);
    const auto& M = mu.algebra();
    const auto& T = mu.coaction_algebra();
    const auto& A = mu.steenrod();
    const auto& C = A.conjugate();
    CHECK(mu.coaction(M.generator("m1")) == T.inject_right(M.generator("m1")));
    CHECK(mu.coaction(M.generator("m2")) ==
          T.algebra().add(T.inject_right(M.generator("m2")), T.inject_left(A.xibar(1))));
    CHECK(M.generator("xi1") == M.generator("m2"));
    Element expected = T.inject_right(M.generator("m8"));
    expected = T.algebra().add(expected, T.tensor(A.xibar(1), M.power(M.generator("m2"), 3)));
    expected = T.algebra().add(expected, T.inject_left(A.xibar(2)));
    CHECK(mu.coaction(M.generator("m8")) == expected);
    CHECK(mu.coaction(M.generator("xi2")) == expected);
    for (const char* g : {"m1", "m3", "m4", "m5", "m6", "m7"})
        CHECK(mu.coaction(M.generator(g)) == T.inject_right(M.generator(g)));
    (void)C;
}

TEST_CASE("H_*(BP) generators and coaction") {
    auto bp = HomologyModel::bp(PrimeField(3), 2);
    const auto& B = bp.algebra();
    const auto& T = bp.coaction_algebra();
    const auto& A = bp.steenrod();
    CHECK(bp.base_generators().size() == 2);
    CHECK(B.degree(B.generator("xi2")) == 16);
    CHECK(bp.coaction(B.generator("xi1")) ==
          T.algebra().add(T.inject_right(B.generator("xi1")), T.inject_left(A.xibar(1))));
}

TEST_CASE("THH models") {
    auto thh = HomologyModel::mu(PrimeField(3), 2).thh();
    const auto& M = thh.algebra();
    CHECK(M.degree(M.generator("s(m1)")) == 3);
    CHECK(M.generator("s(xi1)") == M.generator("s(m2)"));
    std::vector<std::size_t> dims;
    for (const auto& b : thh.bases(7))
        dims.push_back(b.size());
    CHECK(dims == series({2, 4}, {3, 5}, 7));
    CHECK(dims == std::vector<std::size_t>{1, 0, 1, 1, 2, 2, 2, 3});

    auto bp = HomologyModel::bp(PrimeField(3), 2).thh();
    const auto& B = bp.algebra();
    const auto& T = bp.coaction_algebra();
    for (int k = 1; k <= 2; ++k) {
        auto s = B.generator("s(xi" + std::to_string(k) + ")");
        CHECK(bp.coaction(s) == T.inject_right(s));
        CHECK(B.degree(s) == 2 * oracle::ipow(3, k) - 1);
    }
}

TEST_CASE("wedge classes") {
    auto thh = HomologyModel::mu(PrimeField(3), 3).thh();
    const auto& M = thh.algebra();
    CHECK(M.to_text(thh.wedge_class(M.generator("m1"))) == "m1^2*s(m1)");
    for (int ell = 1; ell <= 3; ++ell) {
        auto w = thh.wedge_class(M.generator("m" + std::to_string(ell)));
        CHECK(M.degree(w) == 1 + 3 * 2 * ell);
    }
    CHECK_THROWS_AS(thh.wedge_class(M.generator("s(m1)")), UnsupportedCase);
    auto bp = HomologyModel::bp(PrimeField(5), 1).thh();
    CHECK(bp.algebra().to_text(bp.wedge_class(bp.algebra().generator("xi1"))) == "xi1^4*s(xi1)");
    CHECK_THROWS_AS(HomologyModel::mu(PrimeField(3), 2).wedge_class(M.one()), UnsupportedCase);
}

TEST_CASE("model invariants") {
    for (std::uint32_t p : {3U, 5U}) {
        auto mu = HomologyModel::mu(PrimeField(p), p == 3 ? 8 : 4);
        auto r = verify_model(mu.thh(), 17);
        for (auto& l : r.failure_lines())
            MESSAGE(l);
        CHECK(r.pass());
        CHECK(verify_model(HomologyModel::bp(PrimeField(p), 2).thh(), 20).pass());
        CHECK(verify_model(mu, 17).pass());
    }
}

TEST_CASE("MU -> BP is a surjection of comodule algebras commuting with sigma") {
    auto mu = HomologyModel::mu(PrimeField(3), 8);
    auto bp = HomologyModel::bp(PrimeField(3), 2);
    CHECK(verify_mu_to_bp(mu, bp, 17).pass());
    CHECK(verify_mu_to_bp(mu.thh(), bp.thh(), 17).pass());
    const auto& M = mu.algebra();
    CHECK(mu_to_bp(mu, bp, M.generator("m1")).is_zero());
    CHECK(mu_to_bp(mu, bp, M.generator("m8")) == bp.algebra().generator("xi2"));
}

TEST_CASE("faithful window") {
    CHECK(HomologyModel::mu(PrimeField(3), 3).faithful_max_degree() == 7);
    CHECK(HomologyModel::bp(PrimeField(3), 1).faithful_max_degree() == 15);
    CHECK_THROWS_AS(HomologyModel::mu(PrimeField(3), 0), RangeError);
    CHECK_THROWS_AS(parse_spectrum("ku"), ConfigError);
}
