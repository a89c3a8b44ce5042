#pragma once

#include "thhseg/field.hpp"
#include "thhseg/monomial.hpp"

#include <nlohmann/json_fwd.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thhseg {

/// F_p-linear combination of monomials. Zero coefficients are never stored.
class Element {
public:
    using Terms = std::map<Monomial, Coeff>;

    Element() = default;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Coeff coeff(const Monomial& m) const;
    void add_term(const Monomial& m, Coeff c, const PrimeField& field);

    bool operator==(const Element&) const = default;

private:
    Terms terms_;
};

/// A graded-commutative algebra over F_p presented by a generator table:
/// polynomial on even generators, exterior on odd ones, Laurent in at most one.
class GradedAlgebra {
public:
    GradedAlgebra(PrimeField field, std::shared_ptr<const GeneratorTable> table);

    const PrimeField& field() const noexcept { return field_; }
    const GeneratorTable& table() const noexcept { return *table_; }
    const std::shared_ptr<const GeneratorTable>& table_ptr() const noexcept { return table_; }
    std::uint32_t p() const noexcept { return field_.p(); }

    Element zero() const { return {}; }
    Element one() const { return scalar(1); }
    Element scalar(std::int64_t c) const;
    Element generator(GenId g) const;
    /// Throws ResolutionError on an unknown name.
    Element generator(std::string_view name) const;
    Element monomial(const Monomial& m, Coeff c = 1) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(const Element& a, Coeff c) const;
    /// Accumulates c·b into a.
    void axpy(Element& a, Coeff c, const Element& b) const;
    Element multiply(const Element& a, const Element& b) const;
    Element multiply(const Monomial& a, const Monomial& b) const;
    Element power(const Element& a, unsigned n) const;

    int degree(const Monomial& m) const { return thhseg::degree(m, *table_); }
    bool is_homogeneous(const Element& a) const;
    /// nullopt for zero; throws ContractViolation for an inhomogeneous element.
    std::optional<int> degree(const Element& a) const;
    /// Monomial basis in the given degree (positive-degree tables only).
    std::vector<Monomial> basis(int degree) const;

    /// Algebra homomorphism determined by generator images in target.
    Element map(const Element& a, const GradedAlgebra& target,
                const std::function<Element(GenId)>& on_generator) const;
    /// Graded derivation of the given degree determined by generator images.
    Element derive(const Element& a, int derivation_degree,
                   const std::function<Element(GenId)>& on_generator) const;

    std::string to_text(const Monomial& m) const;
    std::string to_text(const Element& a) const;
    nlohmann::json to_json(const Element& a) const;
    Element from_json(const nlohmann::json& j) const;

private:
    PrimeField field_;
    std::shared_ptr<const GeneratorTable> table_;
};

/// A ⊗ B presented as one graded-commutative algebra on the disjoint union of
/// the generator tables, left generators first. The written form a·b of a
/// monomial is then exactly the tensor a ⊗ b and products carry the Koszul
/// sign (−1)^{|b||c|} of (a⊗b)(c⊗d).
class TensorAlgebra {
public:
    TensorAlgebra(const GradedAlgebra& left, const GradedAlgebra& right);

    const GradedAlgebra& left() const noexcept { return left_; }
    const GradedAlgebra& right() const noexcept { return right_; }
    const GradedAlgebra& algebra() const noexcept { return combined_; }

    Monomial tensor(const Monomial& l, const Monomial& r) const;
    Element tensor(const Element& l, const Element& r) const;
    std::pair<Monomial, Monomial> split(const Monomial& m) const;
    Element inject_left(const Element& l) const;
    Element inject_right(const Element& r) const;

    /// Applies a linear map to the right factor of every term.
    Element map_right(const Element& x, const std::function<Element(const Monomial&)>& f,
                      const TensorAlgebra& target) const;
    /// Applies a linear map to the left factor of every term.
    Element map_left(const Element& x, const std::function<Element(const Monomial&)>& f,
                     const TensorAlgebra& target) const;

    /// "l ⊗ r" terms joined by signs, in canonical order of the combined monomials.
    std::string to_text(const Element& x) const;
    nlohmann::json to_json(const Element& x) const;

private:
    GradedAlgebra left_;
    GradedAlgebra right_;
    GradedAlgebra combined_;
    GenId offset_;
};

} // namespace thhseg
