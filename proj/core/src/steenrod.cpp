#include "thhseg/steenrod.hpp"

#include "thhseg/errors.hpp"

#include <sstream>

namespace thhseg {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

std::shared_ptr<const GeneratorTable> steenrod_table(std::uint32_t p, int max_degree, bool milnor) {
    auto t = std::make_shared<GeneratorTable>();
    const std::string xi = milnor ? "xiM" : "xi";
    const std::string tau = milnor ? "tauM" : "tau";
    for (int k = 1; 2 * ipow(p, k) - 2 <= max_degree; ++k)
        t->add(xi + std::to_string(k), static_cast<int>(2 * ipow(p, k) - 2));
    for (int k = 0; 2 * ipow(p, k) - 1 <= max_degree; ++k)
        t->add(tau + std::to_string(k), static_cast<int>(2 * ipow(p, k) - 1));
    return t;
}

} // namespace

DualSteenrodAlgebra::DualSteenrodAlgebra(PrimeField F, int max_degree)
    : max_degree_(max_degree),
      conj_(F, steenrod_table(F.p(), max_degree, false)),
      milnor_(F, steenrod_table(F.p(), max_degree, true)),
      conj2_(conj_, conj_), milnor2_(milnor_, milnor_) {
    if (max_degree < 1)
        throw RangeError("degree cutoff must be at least 1");
    for (GenId g = 0; g < conj_.table().size(); ++g)
        (conj_.table()[g].name.rfind("xi", 0) == 0 ? xi_ : tau_).push_back(g);
    const auto p = F.p();
    const Coeff minus = F.neg(1);

    // ξ̄_k = −Σ_{j<k} ξ_{k−j}^{p^j} ξ̄_j
    for (int k = 1; k <= k_max(); ++k) {
        Element acc;
        for (int j = 0; j < k; ++j) {
            Element term = milnor_.multiply(milnor_.power(xi(k - j), static_cast<unsigned>(ipow(p, j))),
                                            j == 0 ? milnor_.one() : xibar_milnor_[j - 1]);
            milnor_.axpy(acc, minus, term);
        }
        xibar_milnor_.push_back(std::move(acc));
    }
    // τ̄_k = −τ_k − Σ_{i<k} ξ_{k−i}^{p^i} τ̄_i
    for (int k = 0; k < static_cast<int>(tau_.size()); ++k) {
        Element acc = milnor_.neg(tau(k));
        for (int i = 0; i < k; ++i) {
            Element term = milnor_.multiply(milnor_.power(xi(k - i), static_cast<unsigned>(ipow(p, i))),
                                            taubar_milnor_[i]);
            milnor_.axpy(acc, minus, term);
        }
        taubar_milnor_.push_back(std::move(acc));
    }

    const auto& CC = conj2_.algebra();
    const auto& MM = milnor2_.algebra();
    conj_coproduct_.resize(conj_.table().size());
    milnor_coproduct_.resize(milnor_.table().size());
    for (int k = 1; k <= k_max(); ++k) {
        Element c, m;
        for (int i = 0; i <= k; ++i) {
            const auto q = static_cast<unsigned>(ipow(p, i));
            CC.axpy(c, 1, conj2_.tensor(xibar(i), conj_.power(xibar(k - i), q)));
            MM.axpy(m, 1, milnor2_.tensor(milnor_.power(xi(k - i), q), xi(i)));
        }
        conj_coproduct_[xi_[k - 1]] = std::move(c);
        milnor_coproduct_[xi_[k - 1]] = std::move(m);
    }
    for (int k = 0; k < static_cast<int>(tau_.size()); ++k) {
        Element c = conj2_.tensor(conj_.one(), taubar(k));
        Element m = milnor2_.tensor(tau(k), milnor_.one());
        for (int i = 0; i <= k; ++i) {
            if (k - i > k_max())
                continue;
            const auto q = static_cast<unsigned>(ipow(p, i));
            CC.axpy(c, 1, conj2_.tensor(taubar(i), conj_.power(xibar(k - i), q)));
            MM.axpy(m, 1, milnor2_.tensor(milnor_.power(xi(k - i), q), tau(i)));
        }
        conj_coproduct_[tau_[k]] = std::move(c);
        milnor_coproduct_[tau_[k]] = std::move(m);
    }
}

int DualSteenrodAlgebra::xi_degree(int k) const { return static_cast<int>(2 * ipow(p(), k) - 2); }

int DualSteenrodAlgebra::tau_degree(int k) const { return static_cast<int>(2 * ipow(p(), k) - 1); }

Element DualSteenrodAlgebra::xibar(int k) const {
    if (k == 0)
        return conj_.one();
    if (k < 0 || k > k_max())
        throw TruncationError("xi" + std::to_string(k) + " lies above the degree cutoff " + std::to_string(max_degree_));
    return conj_.generator(xi_[k - 1]);
}

Element DualSteenrodAlgebra::taubar(int k) const {
    if (k < 0 || k >= static_cast<int>(tau_.size()))
        throw TruncationError("tau" + std::to_string(k) + " lies above the degree cutoff " + std::to_string(max_degree_));
    return conj_.generator(tau_[k]);
}

Element DualSteenrodAlgebra::xi(int k) const {
    if (k == 0)
        return milnor_.one();
    if (k < 0 || k > k_max())
        throw TruncationError("xiM" + std::to_string(k) + " lies above the degree cutoff " + std::to_string(max_degree_));
    return milnor_.generator(xi_[k - 1]);
}

Element DualSteenrodAlgebra::tau(int k) const {
    if (k < 0 || k >= static_cast<int>(tau_.size()))
        throw TruncationError("tauM" + std::to_string(k) + " lies above the degree cutoff " + std::to_string(max_degree_));
    return milnor_.generator(tau_[k]);
}

const Element& DualSteenrodAlgebra::conjugate_to_milnor(int k) const {
    if (k < 1 || k > k_max())
        throw TruncationError("xi" + std::to_string(k) + " lies above the degree cutoff " + std::to_string(max_degree_));
    return xibar_milnor_[k - 1];
}

const Element& DualSteenrodAlgebra::conjugate_tau_to_milnor(int k) const {
    if (k < 0 || k >= static_cast<int>(tau_.size()))
        throw TruncationError("tau" + std::to_string(k) + " lies above the degree cutoff " + std::to_string(max_degree_));
    return taubar_milnor_[k];
}

Element DualSteenrodAlgebra::milnor_to_conjugate(int k) const {
    // identical id layouts: relabel the alphabet
    Element out;
    for (const auto& [m, c] : conjugate_to_milnor(k).terms())
        out.add_term(m, c, conj_.field());
    return out;
}

Element DualSteenrodAlgebra::to_milnor(const Element& x) const {
    return conj_.map(x, milnor_, [&](GenId g) -> Element {
        for (int k = 1; k <= k_max(); ++k)
            if (xi_[k - 1] == g)
                return xibar_milnor_[k - 1];
        for (std::size_t k = 0; k < tau_.size(); ++k)
            if (tau_[k] == g)
                return taubar_milnor_[k];
        throw ResolutionError("unknown generator id");
    });
}

Element DualSteenrodAlgebra::to_conjugate(const Element& x) const {
    return milnor_.map(x, conj_, [&](GenId g) -> Element {
        const Element* src = nullptr;
        for (int k = 1; k <= k_max(); ++k)
            if (xi_[k - 1] == g)
                src = &xibar_milnor_[k - 1];
        for (std::size_t k = 0; k < tau_.size(); ++k)
            if (tau_[k] == g)
                src = &taubar_milnor_[k];
        if (!src)
            throw ResolutionError("unknown generator id");
        Element out;
        for (const auto& [m, c] : src->terms())
            out.add_term(m, c, conj_.field());
        return out;
    });
}

Element DualSteenrodAlgebra::conjugation(const Element& x) const {
    // χ(ξ̄_k) = ξ_k; in conjugate letters this is to_conjugate of the Milnor generator.
    return conj_.map(x, conj_, [&](GenId g) { return to_conjugate(milnor_.generator(g)); });
}

Element DualSteenrodAlgebra::check_cutoff(const Element& x, const GradedAlgebra& A) const {
    for (const auto& [m, c] : x.terms())
        if (A.degree(m) > max_degree_)
            throw TruncationError("degree " + std::to_string(A.degree(m)) + " exceeds the cutoff " +
                                  std::to_string(max_degree_));
    return x;
}

Element DualSteenrodAlgebra::coproduct(const Element& x) const {
    check_cutoff(x, conj_);
    return conj_.map(x, conj2_.algebra(), [&](GenId g) { return conj_coproduct_.at(g); });
}

Element DualSteenrodAlgebra::milnor_coproduct(const Element& x) const {
    check_cutoff(x, milnor_);
    return milnor_.map(x, milnor2_.algebra(), [&](GenId g) { return milnor_coproduct_.at(g); });
}

Element DualSteenrodAlgebra::reduce_mod_J0(const Element& x) const {
    Element out;
    for (const auto& [m, c] : x.terms()) {
        bool keep = true;
        for (const auto& [g, e] : m.factors()) {
            bool xi1 = !xi_.empty() && g == xi_[0];
            bool tau0 = g == tau_[0];
            keep = keep && (xi1 || tau0);
        }
        if (keep)
            out.add_term(m, c, milnor_.field());
    }
    return out;
}

Element DualSteenrodAlgebra::left_milnor_coefficient(unsigned r, const Monomial& left,
                                                     std::map<Monomial, Element>& cache) const {
    auto it = cache.find(left);
    if (it == cache.end())
        it = cache.emplace(left, to_milnor(conj_.monomial(left))).first;
    const Monomial target = r == 0 ? Monomial{} : Monomial::generator(xi_.at(0), static_cast<int>(r));
    return milnor_.scalar(it->second.coeff(target));
}

Element DualSteenrodAlgebra::sp_lower(unsigned r, const Element& coaction, const TensorAlgebra& AM) const {
    std::map<Monomial, Element> cache;
    Element out;
    const auto& M = AM.right();
    for (const auto& [m, c] : coaction.terms()) {
        auto [l, rt] = AM.split(m);
        Element k = left_milnor_coefficient(r, l, cache);
        if (k.is_zero())
            continue;
        M.axpy(out, M.field().mul(c, k.terms().begin()->second), M.monomial(rt));
    }
    return out;
}

std::map<unsigned, Element> DualSteenrodAlgebra::sp_lower_all(const Element& coaction, const TensorAlgebra& AM) const {
    std::map<Monomial, Element> cache;
    std::map<unsigned, Element> out;
    const auto& M = AM.right();
    const auto& F = M.field();
    for (const auto& [m, c] : coaction.terms()) {
        auto [l, rt] = AM.split(m);
        auto it = cache.find(l);
        if (it == cache.end())
            it = cache.emplace(l, to_milnor(conj_.monomial(l))).first;
        for (const auto& [lm, lc] : it->second.terms()) {
            unsigned r = 0;
            if (!lm.is_one()) {
                if (xi_.empty() || lm.factors().size() != 1 || lm.factors()[0].first != xi_[0])
                    continue;
                r = static_cast<unsigned>(lm.factors()[0].second);
            }
            M.axpy(out[r], F.mul(c, lc), M.monomial(rt));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Element DualSteenrodAlgebra::sp_lower(unsigned r, const Element& x) const {
    return sp_lower(r, coproduct(x), conj2_);
}

Element DualSteenrodAlgebra::sp_lower_via_milnor(unsigned r, const Element& x) const {
    Element psi = milnor_coproduct(to_milnor(x));
    const Monomial target = r == 0 ? Monomial{} : Monomial::generator(xi_.at(0), static_cast<int>(r));
    Element right;
    for (const auto& [m, c] : psi.terms()) {
        auto [l, rt] = milnor2_.split(m);
        if (l == target)
            milnor_.axpy(right, c, milnor_.monomial(rt));
    }
    return to_conjugate(right);
}

DualSteenrodAlgebra DualSteenrodAlgebra::with_conjugate_override(int k, const Element& milnor_form) const {
    DualSteenrodAlgebra copy = *this;
    if (k < 1 || k > k_max())
        throw RangeError("no conjugate generator xi" + std::to_string(k));
    copy.xibar_milnor_[k - 1] = milnor_form;
    return copy;
}

namespace {

std::string describe(const GradedAlgebra& A, const Element& got, const Element& want) {
    return "got " + A.to_text(got) + ", expected " + A.to_text(want);
}

std::string kr_id(const char* family, std::uint32_t p, int k, unsigned r) {
    std::ostringstream s;
    s << "steenrod/" << family << "/p" << p << "/k" << k << "/r" << (r < 10 ? "0" : "") << r;
    return s.str();
}

} // namespace

VerificationReport verify_sp_on_xibar(const DualSteenrodAlgebra& A, int k_max) {
    VerificationReport report;
    const auto p = A.p();
    const auto& C = A.conjugate();
    for (int k = 1; k <= k_max; ++k) {
        const Element x = A.xibar(k);
        const int deg = A.xi_degree(k);
        for (unsigned r = 0; 2 * static_cast<int>(r) * static_cast<int>(p - 1) <= deg; ++r) {
            Element want;
            for (int i = 0; i <= k; ++i)
                if (static_cast<std::int64_t>(r) == (ipow(p, i) - 1) / (p - 1))
                    want = C.power(A.xibar(k - i), static_cast<unsigned>(ipow(p, i)));
            Element got = C.scale(A.sp_lower(r, x), C.field().sign(r));
            report.add(kr_id("sp-xibar", p, k, r), "(-1)^r SP^r_*(xibar_k) = xibar_{k-i}^{p^i} at r=(p^i-1)/(p-1), else 0",
                       got == want, describe(C, got, want));
        }
    }
    return report;
}

VerificationReport verify_sp_on_xibar_power(const DualSteenrodAlgebra& A, int k_max) {
    VerificationReport report;
    const auto p = A.p();
    const auto& C = A.conjugate();
    for (int k = 1; k <= k_max; ++k) {
        const Element x = C.power(A.xibar(k - 1), p);
        const int deg = static_cast<int>(p) * (k == 1 ? 0 : A.xi_degree(k - 1));
        for (unsigned r = 0; 2 * static_cast<int>(r) * static_cast<int>(p - 1) <= deg; ++r) {
            Element want;
            for (int i = 0; i <= k - 1; ++i)
                if (static_cast<std::int64_t>(r) == static_cast<std::int64_t>(p) * (ipow(p, i) - 1) / (p - 1))
                    want = C.power(A.xibar(k - 1 - i), static_cast<unsigned>(ipow(p, i + 1)));
            Element got = C.scale(A.sp_lower(r, x), C.field().sign(r));
            report.add(kr_id("sp-xibar-pow", p, k, r),
                       "(-1)^r SP^r_*(xibar_{k-1}^p) = xibar_{k-1-i}^{p^{i+1}} at r=p(p^i-1)/(p-1), else 0",
                       got == want, describe(C, got, want));
        }
    }
    return report;
}

VerificationReport verify_hopf_structure(const DualSteenrodAlgebra& A, int max_degree) {
    VerificationReport report;
    const auto p = A.p();
    const auto& C = A.conjugate();
    const auto& M = A.milnor();
    const auto& CC = A.conjugate_square();
    const TensorAlgebra left3(CC.algebra(), C);
    const TensorAlgebra right3(C, CC.algebra());
    const std::string prefix = "steenrod/p" + std::to_string(p) + "/";
    max_degree = std::min(max_degree, A.max_degree());

    for (int k = 1; k <= A.k_max(); ++k) {
        Element sum;
        for (int j = 0; j <= k; ++j)
            M.axpy(sum, 1, M.multiply(M.power(A.xi(k - j), static_cast<unsigned>(ipow(p, j))),
                                      j == 0 ? M.one() : A.conjugate_to_milnor(j)));
        report.add(prefix + "conjugation-recursion/k" + std::to_string(k), "sum_{i+j=k} xi_i^{p^j} xibar_j = 0",
                   sum.is_zero(), "residual " + M.to_text(sum));
        Element reduced = A.reduce_mod_J0(A.conjugate_to_milnor(k));
        Element want = M.scale(M.power(A.xi(1), static_cast<unsigned>((ipow(p, k) - 1) / (p - 1))),
                               M.field().sign(k));
        report.add(prefix + "mod-J0/k" + std::to_string(k), "xibar_k = (-1)^k xi_1^{(p^k-1)/(p-1)} mod J(0)",
                   reduced == want, describe(M, reduced, want));
    }

    for (int d = 0; d <= max_degree; ++d) {
        std::string coassoc, counit, antipode, roundtrip, routes;
        for (const auto& mono : C.basis(d)) {
            const Element x = C.monomial(mono);
            const Element psi = A.coproduct(x);
            auto apply_psi = [&](const Monomial& m) { return A.coproduct(C.monomial(m)); };
            Element lhs = CC.map_left(psi, apply_psi, left3);
            Element rhs = CC.map_right(psi, apply_psi, right3);
            if (!(lhs == rhs) && coassoc.empty())
                coassoc = C.to_text(x);

            Element eps_left, eps_right, chi_sum;
            for (const auto& [m, c] : psi.terms()) {
                auto [l, r] = CC.split(m);
                if (l.is_one())
                    C.axpy(eps_left, c, C.monomial(r));
                if (r.is_one())
                    C.axpy(eps_right, c, C.monomial(l));
                C.axpy(chi_sum, c, C.multiply(A.conjugation(C.monomial(l)), C.monomial(r)));
            }
            if ((!(eps_left == x) || !(eps_right == x)) && counit.empty())
                counit = C.to_text(x);
            Element unit_part = d == 0 ? x : Element{};
            if (!(chi_sum == unit_part) && antipode.empty())
                antipode = C.to_text(x);
            if (!(A.to_conjugate(A.to_milnor(x)) == x) && roundtrip.empty())
                roundtrip = C.to_text(x);
            for (unsigned r = 0; 2 * static_cast<int>(r * (p - 1)) <= d; ++r) {
                Element a = A.sp_lower(r, x);
                Element b = A.sp_lower_via_milnor(r, x);
                bool degree_ok = a.is_zero() || C.degree(a) == d - 2 * static_cast<int>(r * (p - 1));
                if ((!(a == b) || !degree_ok) && routes.empty())
                    routes = C.to_text(x) + " at r=" + std::to_string(r);
            }
        }
        std::string deg = (d < 10 ? "0" : "") + std::to_string(d);
        report.add(prefix + "coassociativity/d" + deg, "(psi x id) psi = (id x psi) psi", coassoc.empty(), coassoc);
        report.add(prefix + "counit/d" + deg, "(eps x id) psi = id = (id x eps) psi", counit.empty(), counit);
        report.add(prefix + "antipode/d" + deg, "mu (chi x id) psi = eta eps", antipode.empty(), antipode);
        report.add(prefix + "milnor-roundtrip/d" + deg, "conjugate -> Milnor -> conjugate is the identity",
                   roundtrip.empty(), roundtrip);
        report.add(prefix + "sp-routes/d" + deg, "SP^r_* via conjugate coproduct = via Milnor coproduct; degree drops by 2r(p-1)",
                   routes.empty(), routes);
    }
    return report;
}

} // namespace thhseg
