#include "thhseg/hochschild.hpp"

#include "thhseg/errors.hpp"

namespace thhseg {

namespace {

void extend(const std::vector<std::vector<Monomial>>& by_degree, int remaining, int slots,
            HochschildTensor& current, std::vector<HochschildTensor>& out,
            const Budget& budget) {
    if (slots == 0) {
        if (remaining == 0) {
            out.push_back(current);
            budget.check(out.size(), "Hochschild complex");
        }
        return;
    }
    // every remaining slot needs degree ≥ 1
    for (int d = 1; d <= remaining - (slots - 1); ++d) {
        if (d >= static_cast<int>(by_degree.size()))
            break;
        for (const auto& m : by_degree[d]) {
            current.push_back(m);
            extend(by_degree, remaining - d, slots - 1, current, out, budget);
            current.pop_back();
        }
    }
}

} // namespace

HochschildComplex::HochschildComplex(const GradedAlgebra& algebra, int max_total_degree, Budget budget)
    : A_(algebra), max_degree_(max_total_degree), window_(algebra.field()) {
    if (max_total_degree < 0)
        throw RangeError("Hochschild cutoff must be non-negative");
    const int top = max_total_degree + 1;
    std::vector<std::vector<Monomial>> by_degree(top + 1);
    for (int d = 0; d <= top; ++d)
        by_degree[d] = A_.basis(d);

    bases_.resize(top + 1);
    index_.resize(top + 1);
    std::size_t total = 0;
    for (int D = 0; D <= top; ++D) {
        for (int n = 0; n <= D; ++n) {
            const int internal = D - n;
            for (int d0 = 0; d0 <= internal; ++d0) {
                for (const auto& a0 : by_degree[d0]) {
                    HochschildTensor current{a0};
                    extend(by_degree, internal - d0, n, current, bases_[D], budget);
                }
            }
        }
        for (Index i = 0; i < bases_[D].size(); ++i)
            index_[D].emplace(bases_[D][i], i);
        total += bases_[D].size();
        budget.check(total, "Hochschild complex");
        window_.set_dimension(D, bases_[D].size());
    }
    for (int D = 1; D <= top; ++D) {
        SparseMatrix d(bases_[D - 1].size(), bases_[D].size());
        for (std::size_t j = 0; j < bases_[D].size(); ++j)
            d.set_column(j, boundary(bases_[D][j]));
        window_.set_differential(D, std::move(d));
    }
}

const std::vector<HochschildTensor>& HochschildComplex::basis(int total_degree) const {
    if (total_degree < 0 || total_degree >= static_cast<int>(bases_.size()))
        throw RangeError("total degree " + std::to_string(total_degree) + " outside the Hochschild window");
    return bases_[total_degree];
}

SparseVector HochschildComplex::boundary(const HochschildTensor& x) const {
    const auto& F = A_.field();
    const int n = static_cast<int>(x.size()) - 1;
    if (n == 0)
        return {};
    int total = n;
    for (const auto& a : x)
        total += A_.degree(a);
    const auto& target_index = index_.at(total - 1);
    std::map<Index, Coeff> acc;
    auto add = [&](const HochschildTensor& y, Coeff c) {
        // a product landing on a unit in a positive slot is degenerate
        for (std::size_t i = 1; i < y.size(); ++i)
            if (y[i].is_one())
                return;
        Coeff& slot = acc[target_index.at(y)];
        slot = F.add(slot, c);
    };
    for (int i = 0; i < n; ++i) {
        Element prod = A_.multiply(x[i], x[i + 1]);
        for (const auto& [m, c] : prod.terms()) {
            HochschildTensor y;
            y.reserve(n);
            y.insert(y.end(), x.begin(), x.begin() + i);
            y.push_back(m);
            y.insert(y.end(), x.begin() + i + 2, x.end());
            add(y, F.mul(c, F.sign(i)));
        }
    }
    int before = 0;
    for (int i = 0; i < n; ++i)
        before += A_.degree(x[i]);
    const long sign_exp = n + static_cast<long>(A_.degree(x[n])) * before;
    Element prod = A_.multiply(x[n], x[0]);
    for (const auto& [m, c] : prod.terms()) {
        HochschildTensor y;
        y.reserve(n);
        y.push_back(m);
        y.insert(y.end(), x.begin() + 1, x.begin() + n);
        add(y, F.mul(c, F.sign(sign_exp)));
    }
    return SparseVector::from_map(acc);
}

std::string HochschildComplex::to_text(const HochschildTensor& x) const {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0)
            out += " ⊗ ";
        out += A_.to_text(x[i]);
    }
    return out;
}

std::string HochschildComplex::to_text(int total_degree, const SparseVector& chain) const {
    if (chain.is_zero())
        return "0";
    const auto& F = A_.field();
    std::string out;
    bool first = true;
    for (const auto& [i, c] : chain.entries()) {
        std::int64_t s = F.symmetric(c);
        if (first)
            out += s < 0 ? "-" : "";
        else
            out += s < 0 ? " - " : " + ";
        first = false;
        std::int64_t mag = s < 0 ? -s : s;
        if (mag != 1)
            out += std::to_string(mag) + "*(";
        out += to_text(basis(total_degree)[i]);
        if (mag != 1)
            out += ")";
    }
    return out;
}

std::vector<HochschildDegree> hochschild_homology_small(const GradedAlgebra& algebra,
                                                        int max_total_degree, Budget budget) {
    HochschildComplex complex(algebra, max_total_degree, budget);
    std::vector<HochschildDegree> out;
    for (auto& h : homology(complex.window())) {
        if (h.degree > max_total_degree)
            continue;
        HochschildDegree d;
        d.total_degree = h.degree;
        d.chain_basis = complex.basis(h.degree);
        for (const auto& z : h.representatives)
            d.representatives.push_back(complex.to_text(h.degree, z));
        d.homology = std::move(h);
        out.push_back(std::move(d));
    }
    return out;
}

VerificationReport verify_hochschild_polynomial(PrimeField F, int x_degree, int max_total_degree, Budget budget) {
    if (x_degree <= 0 || x_degree % 2)
        throw ConfigError("x must have positive even degree");
    auto table = std::make_shared<GeneratorTable>();
    table->add("x", x_degree);
    const GradedAlgebra A(F, table);
    const auto hh = hochschild_homology_small(A, max_total_degree, budget);
    // P(x) ⊗ E(σx)
    std::vector<std::size_t> expected(static_cast<std::size_t>(max_total_degree) + 1, 0);
    for (int a = 0; a <= max_total_degree; a += x_degree) {
        expected[a] += 1;
        if (a + x_degree + 1 <= max_total_degree)
            expected[a + x_degree + 1] += 1;
    }
    VerificationReport rep;
    const std::string pre = "hochschild/p" + std::to_string(F.p()) + "/x" + std::to_string(x_degree) + "/";
    std::vector<std::size_t> got;
    for (const auto& d : hh)
        got.push_back(d.dim());
    for (int n = 0; n <= max_total_degree; ++n) {
        const std::size_t g = static_cast<std::size_t>(n) < got.size() ? got[n] : 0;
        char id[16];
        std::snprintf(id, sizeof id, "d%02d", n);
        rep.add(pre + id, "dim HH_n(P(x)) = dim (P(x) (x) E(sx))_n", g == expected[n],
                std::to_string(g) + " vs " + std::to_string(expected[n]));
    }
    if (x_degree + 1 <= max_total_degree) {
        const auto& reps = hh.at(static_cast<std::size_t>(x_degree + 1)).representatives;
        rep.add(pre + "sigma-representative", "sx is represented by 1 (x) x",
                reps.size() == 1 && reps[0] == "1 ⊗ x", reps.empty() ? "" : reps[0]);
    }
    rep.set_dim(pre + "dims", got);
    return rep;
}

} // namespace thhseg
