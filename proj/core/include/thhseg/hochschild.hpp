#pragma once

#include "thhseg/budget.hpp"
#include "thhseg/chain_complex.hpp"
#include "thhseg/element.hpp"
#include "thhseg/report.hpp"

#include <string>
#include <vector>

namespace thhseg {

/// a_0 ⊗ a_1 ⊗ … ⊗ a_n in the normalized Hochschild complex (a_i of positive
/// degree for i ≥ 1).
using HochschildTensor = std::vector<Monomial>;

struct HochschildDegree {
    int total_degree = 0;
    std::vector<HochschildTensor> chain_basis;
    HomologyDegree homology;
    /// Representative cycles written out as sums of tensors.
    std::vector<std::string> representatives;

    std::size_t dim() const noexcept { return homology.dim(); }
};

/// Normalized Hochschild complex of a free graded-commutative algebra,
/// graded by total degree n + Σ|a_i|.
class HochschildComplex {
public:
    HochschildComplex(const GradedAlgebra& algebra, int max_total_degree, Budget budget = {});

    const std::vector<HochschildTensor>& basis(int total_degree) const;
    /// b applied to one basis tensor, as coordinates in basis(total_degree − 1).
    SparseVector boundary(const HochschildTensor& x) const;
    const ChainComplexWindow& window() const noexcept { return window_; }
    std::string to_text(const HochschildTensor& x) const;
    std::string to_text(int total_degree, const SparseVector& chain) const;

private:
    GradedAlgebra A_;
    int max_degree_;
    std::vector<std::vector<HochschildTensor>> bases_;
    std::vector<std::map<HochschildTensor, Index>> index_;
    ChainComplexWindow window_;
};

/// Per total degree 0..max_total_degree: dimension and basis of HH_*(A).
std::vector<HochschildDegree> hochschild_homology_small(const GradedAlgebra& algebra,
                                                        int max_total_degree, Budget budget = {});

/// HH_*(P(x)) against P(x) ⊗ E(σx), |σx| = |x| + 1, per total degree, with
/// the representative 1 ⊗ x of σx.
VerificationReport verify_hochschild_polynomial(PrimeField F, int x_degree, int max_total_degree,
                                                Budget budget = {});

} // namespace thhseg
