#include "thhseg/linalg.hpp"

#include "thhseg/errors.hpp"

#include <algorithm>

namespace thhseg {

SparseVector SparseVector::unit(Index i, Coeff c) {
    SparseVector v;
    if (c != 0)
        v.entries_.emplace_back(i, c);
    return v;
}

SparseVector SparseVector::from_sorted(std::vector<Entry> entries) {
    SparseVector v;
    std::erase_if(entries, [](const Entry& e) { return e.second == 0; });
    v.entries_ = std::move(entries);
    return v;
}

SparseVector SparseVector::from_map(const std::map<Index, Coeff>& entries) {
    SparseVector v;
    v.entries_.reserve(entries.size());
    for (const auto& e : entries)
        if (e.second != 0)
            v.entries_.push_back(e);
    return v;
}

Coeff SparseVector::at(Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, Index k) { return e.first < k; });
    return (it != entries_.end() && it->first == i) ? it->second : 0;
}

SparseVector SparseVector::scaled(Coeff c, const PrimeField& F) const {
    SparseVector v;
    if (c == 0)
        return v;
    v.entries_.reserve(entries_.size());
    for (const auto& [i, x] : entries_)
        v.entries_.emplace_back(i, F.mul(x, c));
    return v;
}

SparseVector SparseVector::axpy(Coeff c, const SparseVector& other, const PrimeField& F) const {
    if (c == 0)
        return *this;
    SparseVector v;
    v.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            v.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            v.entries_.emplace_back(b->first, F.mul(c, b->second));
            ++b;
        } else {
            Coeff s = F.add(a->second, F.mul(c, b->second));
            if (s != 0)
                v.entries_.emplace_back(a->first, s);
            ++a;
            ++b;
        }
    }
    return v;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        m.columns_[j] = SparseVector::unit(static_cast<Index>(j));
    return m;
}

void SparseMatrix::set_column(std::size_t j, SparseVector v) {
    if (!v.is_zero() && v.entries().back().first >= rows_)
        throw ContractViolation("column entry outside the row range");
    columns_.at(j) = std::move(v);
}

void SparseMatrix::set(std::size_t i, std::size_t j, Coeff c, const PrimeField& F) {
    if (i >= rows_)
        throw ContractViolation("row index outside the matrix");
    auto& col = columns_.at(j);
    Coeff old = col.at(static_cast<Index>(i));
    col = col.axpy(1, SparseVector::unit(static_cast<Index>(i), F.sub(c, old)), F);
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.is_zero(); });
}

SparseVector SparseMatrix::apply(const SparseVector& v, const PrimeField& F) const {
    std::map<Index, Coeff> acc;
    for (const auto& [j, x] : v.entries()) {
        for (const auto& [i, y] : columns_.at(j).entries()) {
            Coeff& slot = acc[i];
            slot = F.add(slot, F.mul(x, y));
        }
    }
    return SparseVector::from_map(acc);
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& other, const PrimeField& F) const {
    if (other.rows() != cols())
        throw ContractViolation("composing matrices of incompatible shapes");
    SparseMatrix out(rows_, other.cols());
    for (std::size_t j = 0; j < other.cols(); ++j)
        out.columns_[j] = apply(other.column(j), F);
    return out;
}

void EchelonBasis::reduce_in_place(std::map<Index, Coeff>& acc, std::map<Index, Coeff>* combo) const {
    auto it = acc.begin();
    while (it != acc.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        const Index pivot = it->first;
        const Coeff c = F_.neg(it->second);
        for (const auto& [i, x] : row->second.vec.entries()) {
            Coeff& slot = acc[i];
            slot = F_.add(slot, F_.mul(c, x));
        }
        if (combo) {
            for (const auto& [i, x] : row->second.combo.entries()) {
                Coeff& slot = (*combo)[i];
                slot = F_.add(slot, F_.mul(c, x));
            }
        }
        // Everything below the pivot is untouched; drop zeros from the pivot on.
        it = acc.lower_bound(pivot);
        while (it != acc.end() && it->second == 0)
            it = acc.erase(it);
    }
}

std::optional<SparseVector> EchelonBasis::insert(const SparseVector& v, Index tag) {
    std::map<Index, Coeff> acc(v.entries().begin(), v.entries().end());
    std::map<Index, Coeff> combo{{tag, 1}};
    reduce_in_place(acc, &combo);
    std::erase_if(acc, [](const auto& e) { return e.second == 0; });
    if (acc.empty()) {
        std::erase_if(combo, [](const auto& e) { return e.second == 0; });
        return SparseVector::from_map(combo);
    }
    const Index pivot = acc.begin()->first;
    const Coeff inv = F_.inv(acc.begin()->second);
    Row row{SparseVector::from_map(acc).scaled(inv, F_), SparseVector::from_map(combo).scaled(inv, F_)};
    rows_.emplace(pivot, std::move(row));
    return std::nullopt;
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
    std::map<Index, Coeff> acc(v.entries().begin(), v.entries().end());
    reduce_in_place(acc, nullptr);
    return SparseVector::from_map(acc);
}

std::optional<SparseVector> EchelonBasis::express(const SparseVector& v) const {
    std::map<Index, Coeff> acc(v.entries().begin(), v.entries().end());
    std::map<Index, Coeff> combo;
    reduce_in_place(acc, &combo);
    std::erase_if(acc, [](const auto& e) { return e.second == 0; });
    if (!acc.empty())
        return std::nullopt;
    // acc = v − Σ combo_k·(tag k) = 0 with combo accumulated with the opposite sign.
    return SparseVector::from_map(combo).scaled(F_.neg(1), F_);
}

std::size_t rank(const SparseMatrix& m, const PrimeField& F) {
    EchelonBasis e(F);
    for (std::size_t j = 0; j < m.cols(); ++j)
        e.insert(m.column(j), static_cast<Index>(j));
    return e.rank();
}

std::vector<SparseVector> kernel(const SparseMatrix& m, const PrimeField& F) {
    EchelonBasis e(F);
    std::vector<SparseVector> out;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (auto rel = e.insert(m.column(j), static_cast<Index>(j)))
            out.push_back(std::move(*rel));
    return out;
}

std::vector<SparseVector> image_basis(const SparseMatrix& m, const PrimeField& F) {
    EchelonBasis e(F);
    std::vector<SparseVector> out;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!e.insert(m.column(j), static_cast<Index>(j)))
            out.push_back(m.column(j));
    return out;
}

} // namespace thhseg
