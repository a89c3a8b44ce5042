#include "thhseg/chain_complex.hpp"

#include "thhseg/errors.hpp"

#include <set>

namespace thhseg {

void ChainComplexWindow::set_dimension(int degree, std::size_t dim) { dims_[degree] = dim; }

void ChainComplexWindow::set_differential(int degree, SparseMatrix d) {
    if (d.cols() != dimension(degree) || d.rows() != dimension(degree - 1))
        throw ContractViolation("differential out of degree " + std::to_string(degree) +
                                " has the wrong shape");
    diffs_[degree] = std::move(d);
}

void ChainComplexWindow::set_labels(int degree, std::vector<std::string> labels) {
    if (labels.size() != dimension(degree))
        throw ContractViolation("label count differs from the dimension in degree " + std::to_string(degree));
    labels_[degree] = std::move(labels);
}

std::size_t ChainComplexWindow::dimension(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

SparseMatrix ChainComplexWindow::differential(int degree) const {
    auto it = diffs_.find(degree);
    if (it != diffs_.end())
        return it->second;
    return SparseMatrix(dimension(degree - 1), dimension(degree));
}

const std::vector<std::string>* ChainComplexWindow::labels(int degree) const {
    auto it = labels_.find(degree);
    return it == labels_.end() ? nullptr : &it->second;
}

std::vector<int> ChainComplexWindow::degrees() const {
    std::vector<int> out;
    for (const auto& [k, d] : dims_)
        out.push_back(k);
    return out;
}

void ChainComplexWindow::check_square_zero() const {
    for (const auto& [k, d] : diffs_) {
        auto below = diffs_.find(k - 1);
        if (below == diffs_.end())
            continue;
        if (!below->second.compose(d, F_).is_zero())
            throw ContractViolation("d∘d is nonzero on degree " + std::to_string(k));
    }
}

std::optional<SparseVector> HomologyDegree::classify(const SparseVector& z) const {
    if (!cycles_->contains(z))
        return std::nullopt;
    auto combo = span_->express(z);
    if (!combo)
        return std::nullopt;
    std::vector<SparseVector::Entry> coords;
    for (const auto& [tag, c] : combo->entries())
        if (tag >= boundary_tags_)
            coords.emplace_back(tag - static_cast<Index>(boundary_tags_), c);
    return SparseVector::from_sorted(std::move(coords));
}

std::vector<HomologyDegree> homology(const ChainComplexWindow& window) {
    window.check_square_zero();
    const PrimeField& F = window.field();
    std::vector<HomologyDegree> out;
    for (int k : window.degrees()) {
        HomologyDegree h;
        h.degree = k;
        h.chain_dim = window.dimension(k);
        const SparseMatrix d_out = window.differential(k);
        const SparseMatrix d_in = window.differential(k + 1);

        auto cycles = std::make_shared<EchelonBasis>(F);
        std::vector<SparseVector> cycle_basis = kernel(d_out, F);
        for (std::size_t i = 0; i < cycle_basis.size(); ++i)
            cycles->insert(cycle_basis[i], static_cast<Index>(i));
        h.cycles_rank = cycles->rank();

        auto span = std::make_shared<EchelonBasis>(F);
        Index tag = 0;
        for (const auto& col : d_in.columns())
            span->insert(col, tag++);
        h.boundaries_rank = span->rank();
        h.boundary_tags_ = tag;

        // Boundary tags may include dependent columns; representatives are
        // tagged after all of them.
        auto consider = [&](const SparseVector& z) {
            if (!span->contains(z)) {
                span->insert(z, tag++);
                h.representatives.push_back(z);
            }
        };
        for (std::size_t j = 0; j < h.chain_dim; ++j)
            if (d_out.column(j).is_zero())
                consider(SparseVector::unit(static_cast<Index>(j)));
        for (const auto& z : cycle_basis)
            consider(z);

        if (h.cycles_rank - h.boundaries_rank != h.dim())
            throw ContractViolation("homology rank mismatch in degree " + std::to_string(k));
        h.lift = SparseMatrix(h.chain_dim, h.dim());
        for (std::size_t j = 0; j < h.dim(); ++j)
            h.lift.set_column(j, h.representatives[j]);
        h.span_ = span;
        h.cycles_ = cycles;
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace thhseg
