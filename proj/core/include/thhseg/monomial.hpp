#pragma once

#include "thhseg/generators.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace thhseg {

/// Sparse exponent vector over the generators of a table, sorted by id with
/// no zero exponents. The written form of a monomial is the product of its
/// generator powers in increasing id order; Koszul signs are relative to it.
class Monomial {
public:
    using Factor = std::pair<GenId, int>;

    Monomial() = default;
    static Monomial generator(GenId g, int exponent = 1);
    /// Sorts, merges repeated ids and drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    std::span<const Factor> factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    int exponent(GenId g) const noexcept;
    Monomial with_exponent(GenId g, int exponent) const;
    /// Exponent-wise sum, no sign or exterior bookkeeping.
    Monomial times(const Monomial& other) const;
    /// Exponents multiplied by k.
    Monomial scaled(int k) const;
    /// Exponents restricted to ids for which keep(id) holds.
    Monomial restricted(const std::function<bool(GenId)>& keep) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
};

int degree(const Monomial& m, const GeneratorTable& table);

/// Total parity bookkeeping: true when some odd generator appears with
/// exponent > 1 or a non-Laurent generator has a negative exponent.
bool violates_relations(const Monomial& m, const GeneratorTable& table);

/// Canonical order: by degree, then at the first generator (in table order)
/// where exponents differ the larger exponent comes first.
struct CanonicalOrder {
    const GeneratorTable* table;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct SignedMonomial {
    Monomial monomial;
    bool negative = false;
};

/// Graded-commutative product of monomials. Returns nullopt when an odd
/// generator would be squared.
std::optional<SignedMonomial> multiply(const Monomial& a, const Monomial& b,
                                       const GeneratorTable& table);

/// All monomials of exactly the given degree, in canonical order, for a table
/// whose generators all have positive degree and are not Laurent.
std::vector<Monomial> monomials_of_degree(const GeneratorTable& table, int degree);

/// Monomials in the listed generators with total degree in [0, max_degree].
/// Exterior generators get exponent ≤ 1. Degrees must be positive.
std::vector<Monomial> monomials_up_to(const GeneratorTable& table, std::span<const GenId> gens,
                                      int max_degree);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

} // namespace thhseg
