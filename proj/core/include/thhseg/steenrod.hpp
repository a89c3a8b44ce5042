#pragma once

#include "thhseg/element.hpp"
#include "thhseg/report.hpp"

#include <map>
#include <vector>

namespace thhseg {

/// The mod p dual Steenrod algebra up to a degree cutoff, presented on the
/// conjugate generators xi<k>, tau<k> and on the Milnor generators xiM<k>,
/// tauM<k>. Milnor forms of the conjugate generators are computed once at
/// construction.
class DualSteenrodAlgebra {
public:
    DualSteenrodAlgebra(PrimeField F, int max_degree);

    std::uint32_t p() const noexcept { return conj_.p(); }
    int max_degree() const noexcept { return max_degree_; }
    /// Largest k with |xi_k| = 2p^k − 2 within the cutoff.
    int k_max() const noexcept { return static_cast<int>(xi_.size()); }
    int xi_degree(int k) const;
    int tau_degree(int k) const;

    const GradedAlgebra& conjugate() const noexcept { return conj_; }
    const GradedAlgebra& milnor() const noexcept { return milnor_; }
    const TensorAlgebra& conjugate_square() const noexcept { return conj2_; }
    const TensorAlgebra& milnor_square() const noexcept { return milnor2_; }

    /// ξ̄_k, τ̄_k and their Milnor counterparts as elements. Throws
    /// TruncationError beyond the cutoff; k = 0 gives 1 for ξ.
    Element xibar(int k) const;
    Element taubar(int k) const;
    Element xi(int k) const;
    Element tau(int k) const;

    /// ξ̄_k written in the Milnor generators.
    const Element& conjugate_to_milnor(int k) const;
    const Element& conjugate_tau_to_milnor(int k) const;
    /// ξ_k written in the conjugate generators (the same polynomial with the
    /// alphabets exchanged).
    Element milnor_to_conjugate(int k) const;

    Element to_milnor(const Element& conjugate_form) const;
    Element to_conjugate(const Element& milnor_form) const;
    /// Antipode on conjugate-generator elements.
    Element conjugation(const Element& conjugate_form) const;

    /// ψ on conjugate-generator elements, valued in conjugate_square().
    /// Throws TruncationError above the cutoff.
    Element coproduct(const Element& x) const;
    /// ψ on Milnor-generator elements, valued in milnor_square().
    Element milnor_coproduct(const Element& x) const;

    /// Sets ξ_k (k ≥ 2) and τ_k (k ≥ 1) to zero in a Milnor-form element.
    Element reduce_mod_J0(const Element& milnor_form) const;

    /// SP^r_* applied through a left coaction valued in A ⊗ M, where the left
    /// factors use the conjugate generators: Σ over terms of the coefficient of
    /// ξ_1^r in the Milnor form of the left factor times the right factor.
    Element sp_lower(unsigned r, const Element& coaction, const TensorAlgebra& AM) const;
    /// All nonzero SP^r_* at once, keyed by r.
    std::map<unsigned, Element> sp_lower_all(const Element& coaction, const TensorAlgebra& AM) const;
    /// SP^r_* on an element of A_* itself via the conjugate coproduct.
    Element sp_lower(unsigned r, const Element& x) const;
    /// The same operation computed through the Milnor coproduct of the Milnor form.
    Element sp_lower_via_milnor(unsigned r, const Element& x) const;

    /// Copy with ξ̄_k replaced by an arbitrary Milnor-form element (for
    /// mutation tests).
    DualSteenrodAlgebra with_conjugate_override(int k, const Element& milnor_form) const;

private:
    Element check_cutoff(const Element& x, const GradedAlgebra& A) const;
    Element left_milnor_coefficient(unsigned r, const Monomial& left,
                                    std::map<Monomial, Element>& cache) const;

    int max_degree_;
    GradedAlgebra conj_;
    GradedAlgebra milnor_;
    TensorAlgebra conj2_;
    TensorAlgebra milnor2_;
    std::vector<GenId> xi_;      // ids of xi1..xiK (same ids in both tables)
    std::vector<GenId> tau_;     // ids of tau0..tauK'
    std::vector<Element> xibar_milnor_;
    std::vector<Element> taubar_milnor_;
    std::vector<Element> conj_coproduct_; // per generator id
    std::vector<Element> milnor_coproduct_;
};

/// Every r with 2r(p−1) ≤ |ξ̄_k| compared with the closed form
/// (−1)^r SP^r_*(ξ̄_k) = ξ̄_{k−i}^{p^i} at r = (p^i−1)/(p−1) and 0 otherwise.
VerificationReport verify_sp_on_xibar(const DualSteenrodAlgebra& A, int k_max);
/// The same for ξ̄_{k−1}^p against ξ̄_{k−1−i}^{p^{i+1}} at r = p(p^i−1)/(p−1).
VerificationReport verify_sp_on_xibar_power(const DualSteenrodAlgebra& A, int k_max);
/// Coassociativity, counit, conjugation recursion, antipode, J(0) reduction
/// and agreement of both SP^r_* routes on all monomials up to max_degree.
VerificationReport verify_hopf_structure(const DualSteenrodAlgebra& A, int max_degree);

} // namespace thhseg
