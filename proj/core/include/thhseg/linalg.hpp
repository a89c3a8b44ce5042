#pragma once

#include "thhseg/field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace thhseg {

using Index = std::uint32_t;

/// Sorted (index, coefficient) pairs with no zero entries.
class SparseVector {
public:
    using Entry = std::pair<Index, Coeff>;

    SparseVector() = default;
    static SparseVector unit(Index i, Coeff c = 1);
    /// Drops zeros; entries must already be sorted by index without repeats.
    static SparseVector from_sorted(std::vector<Entry> entries);
    static SparseVector from_map(const std::map<Index, Coeff>& entries);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    Coeff at(Index i) const;
    Index leading() const { return entries_.front().first; }

    SparseVector scaled(Coeff c, const PrimeField& F) const;
    /// this + c·other
    SparseVector axpy(Coeff c, const SparseVector& other, const PrimeField& F) const;

    bool operator==(const SparseVector&) const = default;

private:
    std::vector<Entry> entries_;
};

/// Column-major sparse matrix over F_p.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const SparseVector& column(std::size_t j) const { return columns_.at(j); }
    const std::vector<SparseVector>& columns() const noexcept { return columns_; }
    void set_column(std::size_t j, SparseVector v);
    Coeff at(std::size_t i, std::size_t j) const { return columns_.at(j).at(static_cast<Index>(i)); }
    void set(std::size_t i, std::size_t j, Coeff c, const PrimeField& F);
    std::size_t nonzeros() const;
    bool is_zero() const;

    SparseVector apply(const SparseVector& v, const PrimeField& F) const;
    /// this ∘ other
    SparseMatrix compose(const SparseMatrix& other, const PrimeField& F) const;

    bool operator==(const SparseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

/// Incrementally maintained echelon form of a span. Each stored vector is
/// normalized so its smallest index (the pivot) has coefficient 1, and keeps
/// the combination of inserted vectors that produced it.
class EchelonBasis {
public:
    explicit EchelonBasis(PrimeField F) : F_(F) {}

    /// Inserts v under a fresh tag. When v is dependent nothing is stored and
    /// the relation r is returned: Σ r_k·(vector tagged k) = 0 with r_tag = 1.
    std::optional<SparseVector> insert(const SparseVector& v, Index tag);
    /// Remainder of v after reduction against the stored pivots.
    SparseVector reduce(const SparseVector& v) const;
    /// Coefficients over inserted tags expressing v, or nullopt if v is not in the span.
    std::optional<SparseVector> express(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

    std::size_t rank() const noexcept { return rows_.size(); }
    const PrimeField& field() const noexcept { return F_; }

private:
    struct Row {
        SparseVector vec;
        SparseVector combo;
    };
    void reduce_in_place(std::map<Index, Coeff>& acc, std::map<Index, Coeff>* combo) const;

    PrimeField F_;
    std::map<Index, Row> rows_;
};

std::size_t rank(const SparseMatrix& m, const PrimeField& F);
/// Basis of the null space, as vectors in the column index space.
std::vector<SparseVector> kernel(const SparseMatrix& m, const PrimeField& F);
/// Columns of m that are independent of the earlier columns.
std::vector<SparseVector> image_basis(const SparseMatrix& m, const PrimeField& F);

} // namespace thhseg
