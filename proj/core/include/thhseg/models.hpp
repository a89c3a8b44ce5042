#pragma once

#include "thhseg/element.hpp"
#include "thhseg/report.hpp"
#include "thhseg/steenrod.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace thhseg {

enum class Spectrum { MU, BP };

std::string to_string(Spectrum s);
/// Accepts "mu" and "bp"; throws ConfigError otherwise.
Spectrum parse_spectrum(const std::string& name);

/// A graded-commutative comodule algebra over the dual Steenrod algebra:
/// H_*(MU), H_*(BP) or H_*(THH(B)) truncated by generator index. Left
/// coaction factors are written in the conjugate generators.
///
/// Generator layout: the base generators (m_ℓ, resp. ξ̄_k) in increasing
/// degree, followed for THH models by s(g) for each base generator g.
class HomologyModel {
public:
    /// Polynomial on m_1..m_{ell_max}, |m_ℓ| = 2ℓ, with m_{p^k−1} = ξ̄_k.
    static HomologyModel mu(PrimeField F, int ell_max);
    /// Polynomial on ξ̄_1..ξ̄_{k_max}.
    static HomologyModel bp(PrimeField F, int k_max);
    static HomologyModel make(PrimeField F, Spectrum s, int index_max, bool thh);
    /// Adjoins primitive exterior generators s(g) of degree |g| + 1.
    HomologyModel thh() const;

    Spectrum spectrum() const noexcept { return spectrum_; }
    bool is_thh() const noexcept { return thh_; }
    std::string name() const;
    /// Short id used in check ids: "mu-l3", "thh-bp-k2".
    std::string slug() const;
    std::uint32_t p() const noexcept { return algebra_.p(); }
    int index_max() const noexcept { return index_max_; }
    /// All degrees up to this bound are complete (no missing generators).
    int faithful_max_degree() const noexcept { return faithful_; }

    const GradedAlgebra& algebra() const noexcept { return algebra_; }
    const DualSteenrodAlgebra& steenrod() const noexcept { return *steenrod_; }
    std::shared_ptr<const DualSteenrodAlgebra> steenrod_ptr() const noexcept { return steenrod_; }
    const TensorAlgebra& coaction_algebra() const noexcept { return coaction_algebra_; }

    const std::vector<GenId>& base_generators() const noexcept { return base_; }
    const std::vector<GenId>& sigma_generators() const noexcept { return sigma_; }
    bool is_sigma(GenId g) const noexcept { return g >= base_.size(); }
    /// s(g) for a base generator g (THH models only).
    GenId sigma_of(GenId base) const;
    /// The base generator g with s(g) = sigma_gen.
    GenId sigma_source(GenId sigma_gen) const;
    /// ℓ with |g| = 2ℓ for a base generator.
    int weight(GenId base) const;
    /// The subscript: ℓ for m_ℓ, k for ξ̄_k.
    int index(GenId base) const { return index_.at(base); }

    /// ν on generators, extended multiplicatively.
    Element coaction(const Element& x) const;
    const Element& generator_coaction(GenId g) const { return coactions_.at(g); }

    /// The suspension derivation (THH models only): g ↦ s(g), s(g) ↦ 0.
    Element sigma(const Element& x) const;
    /// α^{p−1}·σα for homogeneous even α (THH models only).
    Element wedge_class(const Element& alpha) const;

    /// Per-degree monomial bases in [0, max_degree].
    std::vector<std::vector<Monomial>> bases(int max_degree) const;

private:
    HomologyModel(Spectrum s, bool thh, int index_max, GradedAlgebra algebra,
                  std::shared_ptr<const DualSteenrodAlgebra> A);

    Spectrum spectrum_;
    bool thh_;
    int index_max_;
    int faithful_ = 0;
    GradedAlgebra algebra_;
    std::shared_ptr<const DualSteenrodAlgebra> steenrod_;
    TensorAlgebra coaction_algebra_;
    std::vector<GenId> base_;
    std::vector<GenId> sigma_;
    std::vector<int> index_;
    std::vector<Element> coactions_;
};

/// The surjection H_*(MU) → H_*(BP) (THH versions too) killing m_ℓ for
/// ℓ ≠ p^k − 1.
Element mu_to_bp(const HomologyModel& mu, const HomologyModel& bp, const Element& x);

/// Coassociativity and counit of ν on generators and on all monomials up to
/// max_degree; derivation rule, σσ = 0 and σ(x^p) = 0 for THH models.
VerificationReport verify_model(const HomologyModel& model, int max_degree);
/// The surjection MU → BP commutes with ν and σ on all monomials up to max_degree.
VerificationReport verify_mu_to_bp(const HomologyModel& mu, const HomologyModel& bp, int max_degree);

} // namespace thhseg
