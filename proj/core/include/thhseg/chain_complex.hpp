#pragma once

#include "thhseg/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace thhseg {

/// Finite-dimensional chain complex on a window of degrees. d_k maps degree k
/// to degree k − 1; missing differentials are zero.
class ChainComplexWindow {
public:
    explicit ChainComplexWindow(PrimeField F) : F_(F) {}

    void set_dimension(int degree, std::size_t dim);
    /// d_k : C_k → C_{k−1}; its shape must match the recorded dimensions.
    void set_differential(int degree, SparseMatrix d);
    void set_labels(int degree, std::vector<std::string> labels);

    const PrimeField& field() const noexcept { return F_; }
    std::size_t dimension(int degree) const;
    /// d_k, or a zero matrix of the right shape.
    SparseMatrix differential(int degree) const;
    const std::vector<std::string>* labels(int degree) const;
    std::vector<int> degrees() const;

    /// Throws ContractViolation naming the first degree k with d_{k−1}∘d_k ≠ 0.
    void check_square_zero() const;

private:
    PrimeField F_;
    std::map<int, std::size_t> dims_;
    std::map<int, SparseMatrix> diffs_;
    std::map<int, std::vector<std::string>> labels_;
};

struct HomologyDegree {
    int degree = 0;
    std::size_t chain_dim = 0;
    std::size_t cycles_rank = 0;
    std::size_t boundaries_rank = 0;
    /// Chosen cycles whose classes form a basis of H; standard basis cycles first.
    std::vector<SparseVector> representatives;
    /// chain_dim × dim H matrix with the representatives as columns.
    SparseMatrix lift;

    std::size_t dim() const noexcept { return representatives.size(); }
    /// Coordinates of the class of a cycle, or nullopt if z is not a cycle
    /// of this degree.
    std::optional<SparseVector> classify(const SparseVector& z) const;

    std::shared_ptr<const EchelonBasis> span_;
    std::shared_ptr<const EchelonBasis> cycles_;
    std::size_t boundary_tags_ = 0;
};

std::vector<HomologyDegree> homology(const ChainComplexWindow& window);

} // namespace thhseg
