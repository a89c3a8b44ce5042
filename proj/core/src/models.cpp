#include "thhseg/models.hpp"

#include "thhseg/errors.hpp"

#include <algorithm>

namespace thhseg {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

/// k with ℓ = p^k − 1, or 0.
int xi_index_of_weight(std::uint32_t p, int ell) {
    for (int k = 1; ipow(p, k) - 1 <= ell; ++k)
        if (ipow(p, k) - 1 == ell)
            return k;
    return 0;
}

} // namespace

std::string to_string(Spectrum s) { return s == Spectrum::MU ? "mu" : "bp"; }

Spectrum parse_spectrum(const std::string& name) {
    if (name == "mu" || name == "thh-mu")
        return Spectrum::MU;
    if (name == "bp" || name == "thh-bp")
        return Spectrum::BP;
    throw ConfigError("unknown spectrum '" + name + "' (expected mu or bp)");
}

HomologyModel::HomologyModel(Spectrum s, bool thh, int index_max, GradedAlgebra algebra,
                             std::shared_ptr<const DualSteenrodAlgebra> A)
    : spectrum_(s), thh_(thh), index_max_(index_max), algebra_(std::move(algebra)), steenrod_(std::move(A)),
      coaction_algebra_(steenrod_->conjugate(), algebra_) {}

HomologyModel HomologyModel::make(PrimeField F, Spectrum s, int index_max, bool thh) {
    HomologyModel base = s == Spectrum::MU ? mu(F, index_max) : bp(F, index_max);
    return thh ? base.thh() : base;
}

HomologyModel HomologyModel::mu(PrimeField F, int ell_max) {
    if (ell_max < 1)
        throw RangeError("ell-max must be at least 1");
    const auto p = F.p();
    int k_needed = 0;
    while (ipow(p, k_needed + 1) - 1 <= ell_max)
        ++k_needed;
    const int faithful = 2 * ell_max + 1;
    auto A = std::make_shared<DualSteenrodAlgebra>(
        F, std::max<int>(faithful, static_cast<int>(2 * ipow(p, k_needed) - 2)));

    auto table = std::make_shared<GeneratorTable>();
    for (int ell = 1; ell <= ell_max; ++ell)
        table->add("m" + std::to_string(ell), 2 * ell);
    for (int k = 1; k <= k_needed; ++k)
        table->add_alias("xi" + std::to_string(k), static_cast<GenId>(ipow(p, k) - 2));

    HomologyModel model(Spectrum::MU, false, ell_max, GradedAlgebra(F, table), A);
    model.faithful_ = faithful;
    const auto& T = model.coaction_algebra_;
    const auto& M = model.algebra_;
    for (int ell = 1; ell <= ell_max; ++ell) {
        GenId g = static_cast<GenId>(ell - 1);
        model.base_.push_back(g);
        model.index_.push_back(ell);
        const int k = xi_index_of_weight(p, ell);
        Element nu = T.inject_right(M.generator(g));
        if (k > 0) {
            nu = Element{};
            for (int i = 0; i <= k; ++i) {
                const int j = k - i;
                Element right = j == 0 ? M.one() : M.generator(static_cast<GenId>(ipow(p, j) - 2));
                T.algebra().axpy(nu, 1, T.tensor(A->xibar(i), M.power(right, static_cast<unsigned>(ipow(p, i)))));
            }
        }
        model.coactions_.push_back(std::move(nu));
    }
    return model;
}

HomologyModel HomologyModel::bp(PrimeField F, int k_max) {
    if (k_max < 1)
        throw RangeError("k-max must be at least 1");
    const auto p = F.p();
    const int faithful = static_cast<int>(2 * ipow(p, k_max + 1) - 3);
    auto A = std::make_shared<DualSteenrodAlgebra>(F, std::max<int>(faithful, 1));
    auto table = std::make_shared<GeneratorTable>();
    for (int k = 1; k <= k_max; ++k)
        table->add("xi" + std::to_string(k), static_cast<int>(2 * ipow(p, k) - 2));

    HomologyModel model(Spectrum::BP, false, k_max, GradedAlgebra(F, table), A);
    model.faithful_ = faithful;
    const auto& T = model.coaction_algebra_;
    const auto& M = model.algebra_;
    for (int k = 1; k <= k_max; ++k) {
        model.base_.push_back(static_cast<GenId>(k - 1));
        model.index_.push_back(k);
        Element nu;
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            Element right = j == 0 ? M.one() : M.generator(static_cast<GenId>(j - 1));
            T.algebra().axpy(nu, 1, T.tensor(A->xibar(i), M.power(right, static_cast<unsigned>(ipow(p, i)))));
        }
        model.coactions_.push_back(std::move(nu));
    }
    return model;
}

HomologyModel HomologyModel::thh() const {
    if (thh_)
        throw UnsupportedCase("model already contains suspension generators");
    auto table = std::make_shared<GeneratorTable>(algebra_.table());
    std::vector<GenId> sigma;
    for (GenId g : base_) {
        const auto& gen = algebra_.table()[g];
        sigma.push_back(table->add("s(" + gen.name + ")", gen.degree + 1));
    }
    if (spectrum_ == Spectrum::MU) {
        for (int k = 1; ipow(p(), k) - 1 <= index_max_; ++k)
            table->add_alias("s(xi" + std::to_string(k) + ")", sigma.at(static_cast<std::size_t>(ipow(p(), k) - 2)));
    }
    HomologyModel model(spectrum_, true, index_max_, GradedAlgebra(algebra_.field(), table), steenrod_);
    model.faithful_ = faithful_;
    model.base_ = base_;
    model.sigma_ = sigma;
    model.index_ = index_;
    model.coactions_ = coactions_;
    for (GenId s : sigma)
        model.coactions_.push_back(model.coaction_algebra_.inject_right(model.algebra_.generator(s)));
    return model;
}

std::string HomologyModel::name() const {
    std::string b = spectrum_ == Spectrum::MU ? "MU" : "BP";
    return thh_ ? "H_*(THH(" + b + "))" : "H_*(" + b + ")";
}

std::string HomologyModel::slug() const {
    return std::string(thh_ ? "thh-" : "") + to_string(spectrum_) + (spectrum_ == Spectrum::MU ? "-l" : "-k") +
           std::to_string(index_max_);
}

GenId HomologyModel::sigma_of(GenId base) const {
    if (!thh_)
        throw UnsupportedCase("suspension needs a THH model");
    if (base >= base_.size())
        throw ContractViolation("not a base generator: " + algebra_.table().at(base).name);
    return sigma_[base];
}

GenId HomologyModel::sigma_source(GenId g) const {
    if (!thh_ || g < base_.size() || g >= base_.size() + sigma_.size())
        throw ContractViolation("not a suspension generator");
    return static_cast<GenId>(g - base_.size());
}

int HomologyModel::weight(GenId base) const {
    if (base >= base_.size())
        throw ContractViolation("weight of a non-base generator");
    return algebra_.table()[base].degree / 2;
}

Element HomologyModel::coaction(const Element& x) const {
    return algebra_.map(x, coaction_algebra_.algebra(), [&](GenId g) { return coactions_.at(g); });
}

Element HomologyModel::sigma(const Element& x) const {
    if (!thh_)
        throw UnsupportedCase("suspension needs a THH model");
    return algebra_.derive(x, 1, [&](GenId g) -> Element {
        if (g < base_.size())
            return algebra_.generator(sigma_[g]);
        return {};
    });
}

Element HomologyModel::wedge_class(const Element& alpha) const {
    if (!thh_)
        throw UnsupportedCase("wedge class needs a THH model");
    auto d = algebra_.degree(alpha);
    if (!d || *d % 2 != 0)
        throw UnsupportedCase("wedge class needs a nonzero even-degree class, got " + algebra_.to_text(alpha));
    return algebra_.multiply(algebra_.power(alpha, p() - 1), sigma(alpha));
}

std::vector<std::vector<Monomial>> HomologyModel::bases(int max_degree) const {
    std::vector<std::vector<Monomial>> out;
    for (int d = 0; d <= max_degree; ++d)
        out.push_back(algebra_.basis(d));
    return out;
}

Element mu_to_bp(const HomologyModel& mu, const HomologyModel& bp, const Element& x) {
    if (mu.spectrum() != Spectrum::MU || bp.spectrum() != Spectrum::BP || mu.is_thh() != bp.is_thh())
        throw ContractViolation("mu_to_bp needs matching MU and BP models");
    const auto p = mu.p();
    auto image_of_base = [&](GenId g) -> std::optional<GenId> {
        int k = xi_index_of_weight(p, mu.index(g));
        if (k == 0 || k > bp.index_max())
            return std::nullopt;
        return bp.base_generators()[k - 1];
    };
    return mu.algebra().map(x, bp.algebra(), [&](GenId g) -> Element {
        if (!mu.is_sigma(g)) {
            auto img = image_of_base(g);
            return img ? bp.algebra().generator(*img) : Element{};
        }
        auto img = image_of_base(mu.sigma_source(g));
        return img ? bp.algebra().generator(bp.sigma_of(*img)) : Element{};
    });
}

namespace {

std::string deg_tag(int d) { return (d < 10 ? "0" : "") + std::to_string(d); }

} // namespace

VerificationReport verify_model(const HomologyModel& model, int max_degree) {
    VerificationReport report;
    const auto& M = model.algebra();
    const auto& A = model.steenrod();
    const auto& AM = model.coaction_algebra();
    const TensorAlgebra left3(A.conjugate_square().algebra(), M);
    const TensorAlgebra right3(A.conjugate(), AM.algebra());
    const std::string prefix = "model/" + to_string(model.spectrum()) + (model.is_thh() ? "-thh" : "") + "/p" +
                               std::to_string(model.p()) + "/";
    max_degree = std::min(max_degree, A.max_degree());

    for (int d = 0; d <= max_degree; ++d) {
        std::string coassoc, counit, homog;
        for (const auto& m : M.basis(d)) {
            const Element x = M.monomial(m);
            const Element nu = model.coaction(x);
            Element lhs = AM.map_left(nu, [&](const Monomial& l) { return A.coproduct(A.conjugate().monomial(l)); }, left3);
            Element rhs = AM.map_right(nu, [&](const Monomial& r) { return model.coaction(M.monomial(r)); }, right3);
            if (!(lhs == rhs) && coassoc.empty())
                coassoc = M.to_text(x);
            Element eps;
            for (const auto& [t, c] : nu.terms()) {
                auto [l, r] = AM.split(t);
                if (l.is_one())
                    M.axpy(eps, c, M.monomial(r));
            }
            if (!(eps == x) && counit.empty())
                counit = M.to_text(x);
            if (!nu.is_zero() && AM.algebra().degree(nu) != d && homog.empty())
                homog = M.to_text(x);
        }
        report.add(prefix + "coassociativity/d" + deg_tag(d), "(psi x id) nu = (id x nu) nu", coassoc.empty(), coassoc);
        report.add(prefix + "counit/d" + deg_tag(d), "(eps x id) nu = id", counit.empty(), counit);
        report.add(prefix + "homogeneous/d" + deg_tag(d), "nu preserves total degree", homog.empty(), homog);
    }

    if (!model.is_thh())
        return report;

    std::string deriv, square, frob;
    std::vector<Monomial> sample;
    for (int d = 0; d <= std::min(max_degree, 24); ++d)
        for (const auto& m : M.basis(d))
            sample.push_back(m);
    for (GenId g = 0; g < M.table().size(); ++g)
        sample.push_back(Monomial::generator(g));
    for (const auto& a : sample) {
        for (const auto& b : sample) {
            const Element x = M.monomial(a), y = M.monomial(b);
            Element lhs = model.sigma(M.multiply(x, y));
            Element rhs = M.add(M.multiply(model.sigma(x), y),
                                M.scale(M.multiply(x, model.sigma(y)), M.field().sign(M.degree(a))));
            if (!(lhs == rhs) && deriv.empty())
                deriv = M.to_text(x) + " , " + M.to_text(y);
        }
        const Element x = M.monomial(a);
        if (!model.sigma(model.sigma(x)).is_zero() && square.empty())
            square = M.to_text(x);
        if (!model.sigma(M.power(x, model.p())).is_zero() && frob.empty())
            frob = M.to_text(x);
    }
    report.add(prefix + "sigma/derivation", "sigma(xy) = sigma(x) y + (-1)^{|x|} x sigma(y)", deriv.empty(), deriv);
    report.add(prefix + "sigma/square-zero", "sigma o sigma = 0", square.empty(), square);
    report.add(prefix + "sigma/frobenius", "sigma(x^p) = 0", frob.empty(), frob);
    for (GenId s : model.sigma_generators()) {
        const Element nu = model.generator_coaction(s);
        const bool primitive = nu == AM.inject_right(M.generator(s));
        report.add(prefix + "sigma/primitive/" + M.table()[s].name, "suspension classes are comodule primitive",
                   primitive, AM.to_text(nu));
    }
    return report;
}

VerificationReport verify_mu_to_bp(const HomologyModel& mu, const HomologyModel& bp, int max_degree) {
    VerificationReport report;
    const auto& M = mu.algebra();
    const auto& B = bp.algebra();
    const TensorAlgebra& AM = mu.coaction_algebra();
    const TensorAlgebra& AB = bp.coaction_algebra();
    std::string nu_fail, sigma_fail, onto_fail;
    const std::string prefix = std::string("model/mu-to-bp") + (mu.is_thh() ? "-thh" : "") + "/p" + std::to_string(mu.p()) + "/";
    for (int d = 0; d <= max_degree; ++d) {
        for (const auto& m : M.basis(d)) {
            const Element x = M.monomial(m);
            const Element fx = mu_to_bp(mu, bp, x);
            Element lhs = AM.map_right(mu.coaction(x), [&](const Monomial& r) { return mu_to_bp(mu, bp, M.monomial(r)); }, AB);
            Element rhs = bp.coaction(fx);
            if (!(lhs == rhs) && nu_fail.empty())
                nu_fail = M.to_text(x);
            if (mu.is_thh() && !(mu_to_bp(mu, bp, mu.sigma(x)) == bp.sigma(fx)) && sigma_fail.empty())
                sigma_fail = M.to_text(x);
        }
        // every BP monomial is hit by the monomial with matching m-letters
        for (const auto& b : B.basis(d)) {
            bool hit = false;
            for (const auto& m : M.basis(d))
                if (mu_to_bp(mu, bp, M.monomial(m)) == B.monomial(b))
                    hit = true;
            if (!hit && onto_fail.empty())
                onto_fail = B.to_text(b);
        }
    }
    report.add(prefix + "coaction", "MU -> BP commutes with the coaction", nu_fail.empty(), nu_fail);
    if (mu.is_thh())
        report.add(prefix + "sigma", "MU -> BP commutes with sigma", sigma_fail.empty(), sigma_fail);
    report.add(prefix + "surjective", "MU -> BP is onto in each degree", onto_fail.empty(), onto_fail);
    return report;
}

} // namespace thhseg
