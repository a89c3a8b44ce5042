#pragma once

#include "thhseg/budget.hpp"
#include "thhseg/linalg.hpp"
#include "thhseg/models.hpp"
#include "thhseg/report.hpp"
#include "thhseg/singer.hpp"
#include "thhseg/tate_algebra.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace thhseg {

/// N(n, d) = p(n − d) + d.
int segal_N(std::uint32_t p, int n, int d);

/// A strictly increasing sequence of base generators, standing for the
/// product of their s-generators.
struct IndexSequence {
    std::vector<GenId> generators;
    /// Σ ℓ over the entries (|L|), with |g| = 2ℓ.
    int weight = 0;
    int length() const noexcept { return static_cast<int>(generators.size()); }
    bool operator==(const IndexSequence&) const = default;
    auto operator<=>(const IndexSequence& o) const { return generators <=> o.generators; }
};

/// All sequences over the base generators of `model` with
/// 2|L| + slack·r ≤ bound, by recursion on the last entry.
std::vector<IndexSequence> index_sequences(const HomologyModel& model, int bound, int slack);

struct GammaDerivation {
    Element value;
    /// Correction terms of the chase, each shown to vanish.
    std::vector<Element> corrections;
    VerificationReport report;
};

/// The maps of the comparison square on the Ê^∞ level for B = MU or BP:
///   S = R₊(H_*(B)) ⊗ E(s-generators)     (Source alphabet)
///   T = R₊(H_*(THH(B)))                   (Power alphabet, Tate representatives)
///   G = H^c_*(THH(B)^{tC_p})              (Page alphabet)
/// Basis elements of all three are indexed by monomials x = α·s_L of
/// H_*(THH(B)).
class Comparison {
public:
    explicit Comparison(const HomologyModel& base, UnitPolicy units = {});

    std::uint32_t p() const noexcept { return thh_.p(); }
    const HomologyModel& base() const noexcept { return base_; }
    const HomologyModel& thh() const noexcept { return thh_; }
    const SingerConstruction& singer_base() const noexcept { return singer_base_; }
    const SingerConstruction& singer_thh() const noexcept { return singer_thh_; }
    const TateAlgebra& source() const noexcept { return source_; }
    const TateAlgebra& powers() const noexcept { return singer_thh_.representatives(); }
    const TateAlgebra& page() const noexcept { return page_; }

    /// Stated leading terms: g ↦ (−1)^ℓ t^{(p−1)ℓ} ⊗ g^p and
    /// s(g) ↦ (−1)^ℓ t^{(p−1)ℓ} ⊗ g^{p−1}s(g).
    Element gamma_generator(GenId g) const;
    /// Multiplicative extension to elements of H_*(THH(B)).
    Element gamma(const Element& x) const;
    /// γ_*(s(g)) re-derived from ε_*, the ξ̄ correction identity, the Tate
    /// representatives and ω^t, with the derivation-vanishing of the
    /// correction term.
    GammaDerivation gamma_first_principles(GenId sigma_generator) const;

    /// ε_L = Π ε_*(s(g)) representatives in T; γ_L = Π γ_*(s(g)) in G.
    Element epsilon_L(const IndexSequence& L) const;
    Element gamma_L(const IndexSequence& L) const;

    /// f(c ⊗ β) = c·ε_L and g(c ⊗ β) = η^t(c)·γ_L on Source monomials.
    Element f(const Monomial& source_monomial) const;
    Element g(const Monomial& source_monomial) const;
    /// Summand-wise inverses: a T (resp. G) monomial written as c·ε_L
    /// (resp. η^t(c)·γ_L) goes to c ⊗ s_L divided by the coefficient.
    Element phi(const Monomial& power_monomial) const;
    Element psi(const Monomial& page_monomial) const;

    /// The monomial x = α·s_L indexing a basis monomial of S, T or G.
    Monomial key_of_source(const Monomial& m) const;
    Monomial key_of_power(const Monomial& m) const;
    /// Throws ContractViolation if m is not an Ê^∞ monomial.
    Monomial key_of_page(const Monomial& m) const;
    Monomial source_monomial(const Monomial& key) const;
    Monomial power_monomial(const Monomial& key) const;
    Monomial page_monomial(const Monomial& key) const;

private:
    HomologyModel base_;
    HomologyModel thh_;
    SingerConstruction singer_base_;
    SingerConstruction singer_thh_;
    TateAlgebra source_;
    TateAlgebra page_;
};

/// Leading terms from first principles against the stated closed forms, on
/// every generator of the model.
VerificationReport verify_gamma(const Comparison& C);

struct SegalOptions {
    int degree_max = 40;
    /// Lowest filtration floor n; cells are n ∈ [floor, 0], d ∈ [n, degree_max].
    int floor = -24;
    /// The two pro-inverse composites need F^{N(N(n,d),d)}; they are checked
    /// on cells with d − n ≤ composite_span.
    int composite_span = 12;
    unsigned threads = 1;
    /// Added to N(n, d); nonzero only to probe that the identities detect a
    /// wrong reindexing.
    int reindex_shift = 0;
    Budget budget{};
};

/// Per (n, d): the four projection identities, strictness against the tower
/// maps, ranks of Φ_{n,d} = g_n φ_{n,d} and Ψ_{n,d} = f_n ψ_{n,d}, the
/// pro-inverse composites, survival sets against brute force, the ε_L and
/// γ_L bidegrees, and γ_* = Φ_B ε_* on generators.
VerificationReport verify_segal(const Comparison& C, const SegalOptions& options);

} // namespace thhseg
