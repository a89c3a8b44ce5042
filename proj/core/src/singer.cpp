#include "thhseg/singer.hpp"

#include "thhseg/errors.hpp"

#include <random>
#include <string>

namespace thhseg {

FiltrationQuotient::FiltrationQuotient(int floor_, int degree_, std::vector<Monomial> basis_)
    : floor(floor_), degree(degree_), basis(std::move(basis_)) {
    index_.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        index_.emplace(basis[k], static_cast<Index>(k));
}

std::optional<Index> FiltrationQuotient::index_of(const Monomial& m) const {
    const auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

SparseMatrix structural_surjection(const FiltrationQuotient& from, const FiltrationQuotient& to) {
    if (from.floor > to.floor || from.degree != to.degree)
        throw ContractViolation("structural map F^" + std::to_string(from.floor) + " -> F^" +
                                std::to_string(to.floor) + " goes the wrong way");
    SparseMatrix M(to.dim(), from.dim());
    for (std::size_t j = 0; j < from.dim(); ++j)
        if (const auto i = to.index_of(from.basis[j]))
            M.set_column(j, SparseVector::unit(*i));
    return M;
}

SparseVector coordinates(const FiltrationQuotient& q, const Element& x,
                         const std::function<int(const Monomial&)>& filtration) {
    std::map<Index, Coeff> out;
    for (const auto& [m, c] : x.terms()) {
        if (const auto i = q.index_of(m)) {
            out[*i] = c;
            continue;
        }
        if (filtration(m) >= q.floor)
            throw ContractViolation("term outside the quotient basis in filtration " +
                                    std::to_string(filtration(m)));
    }
    return SparseVector::from_map(out);
}

Coeff UnitPolicy::unit(GenId g, std::uint32_t p) const {
    if (mode == Mode::One)
        return 1;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (g + 1)));
    std::uniform_int_distribution<std::uint32_t> dist(1, p - 1);
    return dist(rng);
}

SingerConstruction::SingerConstruction(const HomologyModel& M, UnitPolicy units)
    : classes_(M, TateKind::Page), powers_(M, TateKind::Power), units_(units) {}

int SingerConstruction::filtration(const Monomial& c) const {
    const int p = static_cast<int>(this->p());
    return degree(c) - p * model().algebra().degree(classes_.model_part(c));
}

FiltrationQuotient SingerConstruction::quotient(int d, int floor) const {
    std::vector<Monomial> basis;
    const int p = static_cast<int>(this->p());
    if (d - floor >= 0) {
        const auto& table = model().algebra().table();
        std::vector<GenId> gens(table.size());
        for (GenId g = 0; g < gens.size(); ++g)
            gens[g] = g;
        for (const auto& a : monomials_up_to(table, gens, (d - floor) / p)) {
            const int deg = model().algebra().degree(a);
            const int i = ((deg - d) % 2 + 2) % 2;
            basis.push_back(classes_.lift(i, (deg - i - d) / 2, a));
        }
    }
    return {floor, d, std::move(basis)};
}

Element SingerConstruction::epsilon(const Element& alpha) const {
    const auto& M = model().algebra();
    const auto deg = M.degree(alpha);
    if (!deg)
        return {};
    if (*deg % 2 != 0) {
        if (alpha.size() == 1) {
            const auto& [m, c] = *alpha.terms().begin();
            if (m.factors().size() == 1 && m.factors()[0].second == 1 && model().is_thh() &&
                model().is_sigma(m.factors()[0].first))
                return classes_.lift(0, 0, alpha);
        }
        throw UnsupportedCase("epsilon_* is implemented for even degrees and s-generators only");
    }
    const int p = static_cast<int>(this->p());
    const auto sp = model().steenrod().sp_lower_all(model().coaction(alpha), model().coaction_algebra());
    Element out;
    const auto& F = classes_.algebra().field();
    for (const auto& [r, image] : sp) {
        const int ri = static_cast<int>(r);
        const Coeff sign = ri % 2 ? F.neg(1) : 1;
        classes_.algebra().axpy(out, sign, classes_.lift(0, -(p - 1) * ri, image));
    }
    return out;
}

Element SingerConstruction::representative(const Element& x) const {
    const auto& F = powers_.algebra().field();
    const int p = static_cast<int>(this->p());
    Element out;
    for (const auto& [m, c] : x.terms()) {
        const Monomial a = classes_.model_part(m);
        for (const auto& [g, e] : a.factors())
            if (model().algebra().table()[g].parity == Parity::Odd)
                throw UnsupportedCase("Tate representative of a class with odd factor " +
                                      model().algebra().table()[g].name);
        const int ell = model().algebra().degree(a) / 2;
        const Coeff sign = ell % 2 ? F.neg(c) : c;
        out.add_term(powers_.lift(classes_.u_exponent(m), classes_.t_exponent(m) + (p - 1) * ell, a),
                     sign, F);
    }
    return out;
}

Element SingerConstruction::sigma_representative(GenId g) const {
    if (!model().is_thh() || !model().is_sigma(g))
        throw ContractViolation("not an s-generator");
    const int p = static_cast<int>(this->p());
    const int ell = model().weight(model().sigma_source(g));
    const int m = (p - 1) / 2;
    return powers_.lift(0, m * (2 * ell + 1), model().algebra().monomial(Monomial::generator(g), units_.unit(g, this->p())));
}

Element SingerConstruction::xibar(int k) const {
    if (k == 0)
        return model().algebra().one();
    const auto g = model().algebra().table().find("xi" + std::to_string(k));
    if (k < 0 || !g)
        throw RangeError("xi" + std::to_string(k) + " is not in " + model().name());
    return model().algebra().generator(*g);
}

VerificationReport verify_epsilon_correction(const SingerConstruction& S, int k) {
    if (k < 1)
        throw RangeError("k must be positive");
    const Element xk = S.xibar(k);
    const Element prev = S.model().algebra().power(S.xibar(k - 1), S.p());
    const auto& T = S.classes();
    const int p = static_cast<int>(S.p());
    const Element lhs = S.epsilon(xk);
    const Element rhs = T.algebra().add(T.lift(0, 0, xk), T.shift(S.epsilon(prev), 0, -(p - 1)));
    VerificationReport rep;
    rep.add("singer/epsilon-correction/p" + std::to_string(p) + "/k" + std::to_string(k),
            "epsilon(xibar_k) = 1 (x) xibar_k + t^-(p-1) epsilon(xibar_{k-1}^p)", lhs == rhs,
            lhs == rhs ? "" : T.to_text(lhs) + " vs " + T.to_text(rhs));
    return rep;
}

VerificationReport verify_epsilon(const SingerConstruction& S, int max_degree) {
    VerificationReport rep;
    const auto& M = S.model();
    const auto& T = S.classes();
    const std::string pre = "singer/" + M.slug() + "/p" + std::to_string(S.p()) + "/";
    const auto no_odd = [&](const Monomial& a) {
        for (const auto& [g, e] : a.factors())
            if (M.algebra().table()[g].parity == Parity::Odd)
                return false;
        return true;
    };

    for (const GenId g : M.base_generators()) {
        const Element x = M.algebra().generator(g);
        const Element e = S.epsilon(x);
        const std::string name = M.algebra().table()[g].name;
        bool degree_ok = true;
        Element leading;
        bool lower_ok = true;
        for (const auto& [m, c] : e.terms()) {
            degree_ok = degree_ok && T.algebra().degree(m) == M.algebra().degree(Monomial::generator(g));
            if (T.t_exponent(m) == 0 && T.u_exponent(m) == 0)
                leading.add_term(m, c, T.algebra().field());
            else
                lower_ok = lower_ok && T.t_exponent(m) < 0 && T.u_exponent(m) == 0 &&
                           T.t_exponent(m) % static_cast<int>(S.p() - 1) == 0;
        }
        rep.add(pre + "degree/" + name, "epsilon_* preserves degree", degree_ok, T.to_text(e));
        rep.add(pre + "leading/" + name, "epsilon_*(a) = 1 (x) a + terms t^-(p-1)r (x) SP^r(a)",
                lower_ok && leading == T.lift(0, 0, x), T.to_text(e));
    }
    for (const GenId g : M.sigma_generators()) {
        const Element x = M.algebra().generator(g);
        const std::string name = M.algebra().table()[g].name;
        rep.add(pre + "primitive/" + name, "epsilon_*(s(g)) = 1 (x) s(g)",
                S.epsilon(x) == T.lift(0, 0, x), T.to_text(S.epsilon(x)));
        const Element r = S.sigma_representative(g);
        const auto [s, t] = S.representatives().bidegree(r.terms().begin()->first);
        const int ell = M.weight(M.sigma_source(g));
        const int p = static_cast<int>(S.p());
        rep.add(pre + "sigma-representative/" + name, "representative in bidegree (-(p-1)(2l+1), p(2l+1))",
                s == -(p - 1) * (2 * ell + 1) && t == p * (2 * ell + 1),
                std::to_string(s) + "," + std::to_string(t));
    }

    // multiplicativity on even monomials
    std::vector<GenId> even = M.base_generators();
    const auto monos = monomials_up_to(M.algebra().table(), even, max_degree);
    std::size_t bad = 0;
    std::string cex;
    for (const GenId g : even) {
        const Element eg = S.epsilon(M.algebra().generator(g));
        for (const auto& a : monos) {
            if (!no_odd(a) || M.algebra().degree(a) + M.algebra().degree(Monomial::generator(g)) > max_degree)
                continue;
            const Element ea = S.epsilon(M.algebra().monomial(a));
            const Element prod = S.epsilon(M.algebra().multiply(Monomial::generator(g), a));
            if (prod != T.algebra().multiply(eg, ea) && bad++ == 0)
                cex = M.algebra().to_text(Monomial::generator(g)) + " * " + M.algebra().to_text(a);
        }
    }
    rep.add(pre + "multiplicative", "epsilon_*(ab) = epsilon_*(a) epsilon_*(b)", bad == 0, cex);

    // tower functoriality and degree bound
    bool tower_ok = true;
    bool bound_ok = true;
    const auto& F = M.algebra().field();
    for (int d = -4; d <= max_degree; ++d) {
        for (int n2 = -6; n2 <= 2; n2 += 2) {
            const auto q0 = S.quotient(d, n2 - 4);
            const auto q1 = S.quotient(d, n2 - 2);
            const auto q2 = S.quotient(d, n2);
            const auto direct = structural_surjection(q0, q2);
            tower_ok = tower_ok && structural_surjection(q1, q2).compose(structural_surjection(q0, q1), F) == direct;
            for (const auto& c : q0.basis)
                tower_ok = tower_ok && S.filtration(c) >= q0.floor && S.degree(c) == d;
            bound_ok = bound_ok && (d >= q2.floor || q2.dim() == 0);
        }
    }
    rep.add(pre + "tower", "F^n' -> F^n -> F^n'' equals F^n' -> F^n''", tower_ok);
    rep.add(pre + "connective", "F^n is concentrated in degrees >= n", bound_ok);
    return rep;
}

} // namespace thhseg
