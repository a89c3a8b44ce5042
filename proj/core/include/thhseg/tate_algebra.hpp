#pragma once

#include "thhseg/element.hpp"
#include "thhseg/models.hpp"

#include <string>
#include <utility>

namespace thhseg {

/// Which Ê-term alphabet a Tate algebra carries on top of E(u) ⊗ P(t, t^{-1}).
/// All three share the generator layout [u, t, base generators, s-generators]
/// of the underlying model, so exponent vectors move between them unchanged.
enum class TateKind {
    /// u^i t^r ⊗ x with x in the model itself (Tate page of THH(B), or Singer
    /// classes of M).
    Page,
    /// u^i t^r ⊗ x^{⊗p}: generators P(g) of degree p|g| for every model generator.
    Power,
    /// u^i t^r ⊗ α^{⊗p} ⊗ β: P(g) for base generators, s(g) unchanged.
    Source,
};

class TateAlgebra {
public:
    static constexpr GenId u_id = 0;
    static constexpr GenId t_id = 1;
    static constexpr GenId offset = 2;

    TateAlgebra(const HomologyModel& model, TateKind kind);

    TateKind kind() const noexcept { return kind_; }
    const HomologyModel& model() const noexcept { return *model_; }
    const GradedAlgebra& algebra() const noexcept { return algebra_; }
    std::uint32_t p() const noexcept { return algebra_.p(); }

    /// u^i t^r times the image of a model monomial (exponents copied).
    Monomial lift(int i, int r, const Monomial& x) const;
    Element lift(int i, int r, const Element& x) const;
    /// The model part of a monomial, in the model's ids.
    Monomial model_part(const Monomial& m) const;
    int u_exponent(const Monomial& m) const { return m.exponent(u_id); }
    int t_exponent(const Monomial& m) const { return m.exponent(t_id); }
    /// Tate filtration −(i + 2r).
    int filtration(const Monomial& m) const { return -(u_exponent(m) + 2 * t_exponent(m)); }
    /// (s, t) = (filtration, internal degree).
    std::pair<int, int> bidegree(const Monomial& m) const;
    /// (i, r) with −(i + 2r) = s.
    static std::pair<int, int> hat_exponents(int s);

    /// Multiplication by u^i t^r (the Ĥ-module action).
    Element shift(const Element& x, int i, int r) const;

    /// "c*u*t^r ⊗ x" terms joined by signs.
    std::string to_text(const Element& x) const;
    std::string to_text(const Monomial& m) const;
    nlohmann::json to_json(const Element& x) const;

private:
    std::shared_ptr<const HomologyModel> model_;
    TateKind kind_;
    GradedAlgebra algebra_;
};

} // namespace thhseg
