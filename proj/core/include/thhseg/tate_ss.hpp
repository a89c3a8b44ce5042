#pragma once

#include "thhseg/linalg.hpp"
#include "thhseg/models.hpp"
#include "thhseg/report.hpp"
#include "thhseg/tate_algebra.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace thhseg {

using Bidegree = std::pair<int, int>;

/// Filtration range [s_min, s_max] and total-degree range [degree_min,
/// degree_max]; internal degrees t = degree − s are nonnegative.
struct TateWindow {
    int s_min = 0;
    int s_max = 0;
    int degree_min = 0;
    int degree_max = 0;

    bool empty() const noexcept { return s_min > s_max || degree_min > degree_max; }
    bool contains(int s, int t) const noexcept {
        return t >= 0 && s >= s_min && s <= s_max && s + t >= degree_min && s + t <= degree_max;
    }
    TateWindow padded(int ds, int dd) const { return {s_min - ds, s_max + ds, degree_min - dd, degree_max + dd}; }
    std::vector<Bidegree> bidegrees() const;
};

struct TateCell {
    /// Monomial basis of Ê² in this bidegree: Ê^∞ monomials first.
    std::vector<Monomial> basis;
    /// Page 2: the basis. Page 3: cycle representatives of a homology basis.
    std::vector<Element> classes;
    /// Spanning set of the image of the incoming d² (page 3 only).
    std::vector<Element> boundaries;
    /// The window cannot decide this bidegree.
    bool undetermined = false;
};

struct TatePage {
    int page = 2;
    TateWindow window;
    std::shared_ptr<const TateAlgebra> algebra;
    std::map<Bidegree, TateCell> cells;

    std::size_t dim(int s, int t) const;
    bool undetermined(int s, int t) const;
};

/// d² matrices keyed by source bidegree, mapping (s, t) to (s − 2, t + 1).
struct D2Map {
    std::map<Bidegree, SparseMatrix> matrices;
};

/// For a THH model: each model generator g of the base carries exponents
/// that are multiples of p with s(g) absent, or ≡ p − 1 mod p with s(g)
/// present (monomials of P(g^p) ⊗ E(g^{p−1}σg) up to sign).
bool is_einf_monomial(const HomologyModel& thh, const Monomial& x);
/// dim of P(g^p) ⊗ E(g^{p−1}σg) in internal degree t.
std::size_t einf_dimension(const HomologyModel& thh, int t);

TatePage e2_page(const HomologyModel& thh, const TateWindow& window);
/// d²(u^i t^r ⊗ x) = u^i t^{r+1} ⊗ σx on arbitrary elements.
Element d2(const TateAlgebra& page, const Element& x);
D2Map d2_matrices(const TatePage& e2);
/// Homology of d² inside the window of e2; bidegrees whose incoming or
/// outgoing d² leaves the window are marked undetermined.
TatePage e3_page(const TatePage& e2, const D2Map& d2map);
/// Ê³ on the window, computed from a padded Ê² so that every bidegree is
/// determined.
TatePage e3_page(const HomologyModel& thh, const TateWindow& window);

/// Every Ê³ class lies in the span of products of u, t^{±1}, g^p and
/// g^{p−1}σg plus the image of d².
VerificationReport verify_collapse(const TatePage& e3);

struct TateSuiteOptions {
    std::uint64_t seed = 1;
    std::size_t leibniz_samples = 300;
    bool mutations = true;
};

/// d²∘d² = 0, Leibniz rule, t-periodicity, Ê³ dimensions against the closed
/// form, collapse, and the two mutation probes.
VerificationReport verify_tate(const HomologyModel& thh, const TateWindow& window,
                               const TateSuiteOptions& options = {});

/// One term c·u^i t^r ⊗ e_j ⊗ α^{⊗p}.
struct KappaTerm {
    Coeff coeff = 1;
    int i = 0;
    int r = 0;
    int j = 0;
    Monomial alpha;

    bool operator==(const KappaTerm&) const = default;
};

/// κ_*(e_j ⊗ u^i t^r ⊗ α^{⊗p}) modulo Tate filtration: a straight swap,
/// except κ(e_1 ⊗ u t^r ⊗ α) = u t^r ⊗ e_1 ⊗ α + t^r ⊗ e_0 ⊗ α.
std::vector<KappaTerm> kappa_star(int j, int i, int r, const Monomial& alpha);
/// ω^t_*(e_j ⊗ u^i t^r ⊗ α^{⊗p}) modulo Tate filtration, α a monomial in the
/// base generators of a THH model.
Element omega_t_star(const TateAlgebra& page, int j, int i, int r, const Monomial& alpha);
/// e_0 ⊗ x^{⊗p} ↦ x^p, e_1 ⊗ x^{⊗p} ↦ x^{p−1}σx.
Element substitute(const TateAlgebra& page, const std::vector<KappaTerm>& terms);
std::string to_text(const TateAlgebra& page, const std::vector<KappaTerm>& terms);

/// ω^t = substitution ∘ κ on every (j, i, r, α) with |α| ≤ max_degree and
/// r in [r_min, r_max]; the displayed cases of both maps.
VerificationReport verify_kappa_omega(const HomologyModel& thh, int max_degree, int r_min, int r_max);

} // namespace thhseg
