#pragma once

#include "thhseg/linalg.hpp"
#include "thhseg/models.hpp"
#include "thhseg/report.hpp"
#include "thhseg/tate_algebra.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace thhseg {

/// Basis elements of one degree of a filtration quotient F^n, with the
/// structural surjections F^{n'} → F^n given by basis restriction.
struct FiltrationQuotient {
    int floor = 0;
    int degree = 0;
    std::vector<Monomial> basis;

    FiltrationQuotient() = default;
    FiltrationQuotient(int floor, int degree, std::vector<Monomial> basis);
    std::optional<Index> index_of(const Monomial& m) const;
    std::size_t dim() const noexcept { return basis.size(); }

private:
    std::unordered_map<Monomial, Index, MonomialHash> index_;
};

/// F^{from.floor} → F^{to.floor}; requires from.floor ≤ to.floor and equal
/// degrees. Basis elements of `from` missing from `to` go to zero.
SparseMatrix structural_surjection(const FiltrationQuotient& from, const FiltrationQuotient& to);

/// Coefficients of elements of a Tate algebra in a quotient basis. Terms
/// outside the basis must have filtration below the floor (they vanish in
/// F^n); anything else throws ContractViolation.
SparseVector coordinates(const FiltrationQuotient& q, const Element& x,
                         const std::function<int(const Monomial&)>& filtration);

/// The F_p-unit attached to the odd Tate representative of ε_*(σg); only
/// determined up to a unit, so it is a parameter.
struct UnitPolicy {
    enum class Mode { One, Random };
    Mode mode = Mode::One;
    std::uint64_t seed = 0;

    Coeff unit(GenId sigma_generator, std::uint32_t p) const;
};

/// The homological Singer construction R₊(M) for a model M, through its
/// Ê^∞ basis u^i t^r ⊗ α. The filtration of a class is that of its Tate
/// representative, total degree − p|α|.
class SingerConstruction {
public:
    explicit SingerConstruction(const HomologyModel& M, UnitPolicy units = {});

    const HomologyModel& model() const noexcept { return classes_.model(); }
    /// Singer classes: [u, t, model generators] with the model degrees.
    const TateAlgebra& classes() const noexcept { return classes_; }
    /// Tate representatives: [u, t, P(g)...], |P(g)| = p|g|.
    const TateAlgebra& representatives() const noexcept { return powers_; }
    const UnitPolicy& units() const noexcept { return units_; }
    std::uint32_t p() const noexcept { return classes_.p(); }

    Element singer_class(int i, int r, const Element& alpha) const { return classes_.lift(i, r, alpha); }
    int degree(const Monomial& c) const { return classes_.algebra().degree(c); }
    int filtration(const Monomial& c) const;

    /// Basis of F^floor R₊(M) in one total degree.
    FiltrationQuotient quotient(int degree, int floor) const;

    /// ε_*(α) = Σ_r t^{−(p−1)r} ⊗ (−1)^r SP^r_*(α) for homogeneous even α.
    /// σ-generators are primitive: ε_*(s(g)) = 1 ⊗ s(g). Other odd input
    /// throws UnsupportedCase.
    Element epsilon(const Element& alpha) const;

    /// ±t^{r+(p−1)ℓ} ⊗ α^{⊗p} for classes with α even and free of odd
    /// generators (|α| = 2ℓ); throws UnsupportedCase otherwise.
    Element representative(const Element& singer_classes) const;
    /// unit·t^{m(2ℓ+1)} ⊗ P(s(g)), m = (p−1)/2, the representative of ε_*(s(g)).
    Element sigma_representative(GenId sigma_generator) const;

    /// ξ̄_k as an element of the model; RangeError if not present.
    Element xibar(int k) const;

private:
    TateAlgebra classes_;
    TateAlgebra powers_;
    UnitPolicy units_;
};

/// ε_*(ξ̄_k) = 1 ⊗ ξ̄_k + t^{−(p−1)}·ε_*(ξ̄_{k−1}^p); RangeError for k outside
/// the model.
VerificationReport verify_epsilon_correction(const SingerConstruction& S, int k);
/// Degree preservation, leading term 1 ⊗ α and ε_* multiplicativity on
/// generators and on even monomials up to max_degree; tower functoriality.
VerificationReport verify_epsilon(const SingerConstruction& S, int max_degree);

} // namespace thhseg
