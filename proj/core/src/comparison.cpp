#include "thhseg/comparison.hpp"

#include "thhseg/errors.hpp"
#include "thhseg/tate_ss.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>

namespace thhseg {

int segal_N(std::uint32_t p, int n, int d) { return static_cast<int>(p) * (n - d) + d; }

std::vector<IndexSequence> index_sequences(const HomologyModel& model, int bound, int slack) {
    std::vector<IndexSequence> out;
    const auto& gens = model.base_generators();
    IndexSequence cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        out.push_back(cur);
        for (std::size_t k = from; k < gens.size(); ++k) {
            const int w = model.weight(gens[k]);
            if (2 * (cur.weight + w) + slack * (cur.length() + 1) > bound)
                continue;
            cur.generators.push_back(gens[k]);
            cur.weight += w;
            rec(k + 1);
            cur.generators.pop_back();
            cur.weight -= w;
        }
    };
    if (bound >= 0)
        rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

Comparison::Comparison(const HomologyModel& base, UnitPolicy units)
    : base_(base.is_thh() ? throw ContractViolation("comparison needs the base model, not THH") : base),
      thh_(base.thh()), singer_base_(base_), singer_thh_(thh_, units), source_(thh_, TateKind::Source),
      page_(thh_, TateKind::Page) {}

Element Comparison::gamma_generator(GenId g) const {
    const auto& M = thh_.algebra();
    const int p = static_cast<int>(this->p());
    const bool sigma = thh_.is_sigma(g);
    const GenId h = sigma ? thh_.sigma_source(g) : g;
    const int ell = thh_.weight(h);
    Element x = M.power(M.generator(h), sigma ? p - 1 : p);
    if (sigma)
        x = M.multiply(x, M.generator(g));
    if (ell % 2)
        x = M.neg(x);
    return page_.lift(0, (p - 1) * ell, x);
}

Element Comparison::gamma(const Element& x) const {
    return thh_.algebra().map(x, page_.algebra(), [&](GenId g) { return gamma_generator(g); });
}

namespace {

Element embed(const HomologyModel& thh, const Element& x) {
    Element out;
    for (const auto& [m, c] : x.terms())
        out.add_term(m, c, thh.algebra().field());
    return out;
}

// k with ξ̄_k = g, if any
std::optional<int> xibar_index(const SingerConstruction& S, GenId g) {
    for (int k = 1;; ++k) {
        try {
            if (S.xibar(k) == S.model().algebra().generator(g))
                return k;
        } catch (const RangeError&) {
            return std::nullopt;
        }
    }
}

} // namespace

GammaDerivation Comparison::gamma_first_principles(GenId sg) const {
    if (!thh_.is_sigma(sg))
        throw ContractViolation("gamma_first_principles takes an s-generator");
    GammaDerivation out;
    const GenId h = thh_.sigma_source(sg);
    const int p = static_cast<int>(this->p());
    const auto& B = base_.algebra();
    const auto& R = singer_base_.classes();
    const std::string name = thh_.algebra().table()[sg].name;
    const std::string pre = "gamma/" + thh_.slug() + "/p" + std::to_string(p) + "/" + name + "/";

    const Element eps = singer_base_.epsilon(B.generator(h));
    Element correction;
    Element prev;
    if (const auto k = xibar_index(singer_base_, h)) {
        prev = B.power(singer_base_.xibar(*k - 1), this->p());
        correction = R.shift(singer_base_.epsilon(prev), 0, -(p - 1));
    }
    const Element difference = R.algebra().sub(eps, correction);
    out.report.add(pre + "correction-identity", "epsilon(g) - t^-(p-1) epsilon(xibar_{k-1}^p) = 1 (x) g",
                   difference == R.lift(0, 0, B.generator(h)), R.to_text(difference));

    // ω^t(e_1 ⊗ −) on the Tate representative of each term
    const auto omega_e1 = [&](const Element& singer) {
        const Element rep = singer_base_.representative(singer);
        const auto& P = singer_base_.representatives();
        Element sum;
        for (const auto& [m, c] : rep.terms())
            page_.algebra().axpy(sum, c,
                                 omega_t_star(page_, 1, P.u_exponent(m), P.t_exponent(m), P.model_part(m)));
        return sum;
    };
    out.value = omega_e1(difference);
    bool vanish = true;
    if (!correction.is_zero()) {
        vanish = thh_.sigma(embed(thh_, prev)).is_zero();
        for (const auto& [m, c] : correction.terms()) {
            Element term;
            term.add_term(m, c, R.algebra().field());
            out.corrections.push_back(omega_e1(term));
            vanish = vanish && out.corrections.back().is_zero();
        }
    }
    out.report.add(pre + "derivation-vanishing", "omega^t(e1 (x) t^-(p-1) epsilon(xibar_{k-1}^p)) = 0 since s(x^p) = 0",
                   vanish);
    const Element stated = gamma_generator(sg);
    out.report.add(pre + "closed-form", "gamma(s(g)) = (-1)^l t^{(p-1)l} (x) g^{p-1} s(g)", out.value == stated,
                   page_.to_text(out.value) + " vs " + page_.to_text(stated));
    return out;
}

Element Comparison::epsilon_L(const IndexSequence& L) const {
    Element out = powers().algebra().one();
    for (const GenId g : L.generators)
        out = powers().algebra().multiply(out, singer_thh_.sigma_representative(thh_.sigma_of(g)));
    return out;
}

Element Comparison::gamma_L(const IndexSequence& L) const {
    Element out = page_.algebra().one();
    for (const GenId g : L.generators)
        out = page_.algebra().multiply(out, gamma_generator(thh_.sigma_of(g)));
    return out;
}

namespace {

struct Split {
    Monomial alpha;
    IndexSequence L;
};

Split split_key(const HomologyModel& thh, const Monomial& key) {
    Split s;
    s.alpha = key.restricted([&](GenId g) { return !thh.is_sigma(g); });
    for (const GenId g : thh.base_generators())
        if (key.exponent(thh.sigma_of(g))) {
            s.L.generators.push_back(g);
            s.L.weight += thh.weight(g);
        }
    return s;
}

} // namespace

Monomial Comparison::key_of_source(const Monomial& m) const { return source_.model_part(m); }
Monomial Comparison::key_of_power(const Monomial& m) const { return powers().model_part(m); }

Monomial Comparison::key_of_page(const Monomial& m) const {
    const Monomial y = page_.model_part(m);
    const int p = static_cast<int>(this->p());
    std::vector<Monomial::Factor> f;
    for (const GenId g : thh_.base_generators()) {
        const int s = y.exponent(thh_.sigma_of(g));
        const int e = y.exponent(g) - (p - 1) * s;
        if (e < 0 || e % p != 0)
            throw ContractViolation("not an E-infinity monomial: " + page_.to_text(m));
        if (e)
            f.emplace_back(g, e / p);
    }
    for (const GenId g : thh_.base_generators())
        if (y.exponent(thh_.sigma_of(g)))
            f.emplace_back(thh_.sigma_of(g), 1);
    return Monomial::from_factors(std::move(f));
}

Monomial Comparison::source_monomial(const Monomial& key) const { return source_.lift(0, 0, key); }
Monomial Comparison::power_monomial(const Monomial& key) const { return powers().lift(0, 0, key); }

Monomial Comparison::page_monomial(const Monomial& key) const {
    const int p = static_cast<int>(this->p());
    std::vector<Monomial::Factor> f;
    for (const GenId g : thh_.base_generators()) {
        const int s = key.exponent(thh_.sigma_of(g));
        const int e = p * key.exponent(g) + (p - 1) * s;
        if (e)
            f.emplace_back(g, e);
    }
    for (const GenId g : thh_.base_generators())
        if (key.exponent(thh_.sigma_of(g)))
            f.emplace_back(thh_.sigma_of(g), 1);
    return page_.lift(0, 0, Monomial::from_factors(std::move(f)));
}

Element Comparison::f(const Monomial& m) const {
    const auto [alpha, L] = split_key(thh_, source_.model_part(m));
    const Element c = powers().algebra().monomial(powers().lift(source_.u_exponent(m), source_.t_exponent(m), alpha));
    return powers().algebra().multiply(c, epsilon_L(L));
}

Element Comparison::g(const Monomial& m) const {
    const auto [alpha, L] = split_key(thh_, source_.model_part(m));
    const Element c = page_.algebra().monomial(
        page_.lift(source_.u_exponent(m), source_.t_exponent(m), alpha.scaled(static_cast<int>(p()))));
    return page_.algebra().multiply(c, gamma_L(L));
}

namespace {

Element divide_out(const TateAlgebra& S, const TateAlgebra& target, const Monomial& z, const Monomial& key,
                   int t_shift, const std::function<Element(const Monomial&)>& forward) {
    const Monomial c = S.lift(target.u_exponent(z), target.t_exponent(z) - t_shift, key);
    const Coeff q = forward(c).coeff(z);
    if (q == 0)
        throw ContractViolation("summand decomposition failed at " + target.to_text(z));
    return S.algebra().monomial(c, S.algebra().field().inv(q));
}

int single_t_exponent(const TateAlgebra& A, const Element& x) {
    if (x.size() != 1)
        throw ContractViolation("expected a single leading term, got " + A.to_text(x));
    return A.t_exponent(x.terms().begin()->first);
}

} // namespace

Element Comparison::phi(const Monomial& z) const {
    const Monomial key = powers().model_part(z);
    const auto [alpha, L] = split_key(thh_, key);
    return divide_out(source_, powers(), z, key, single_t_exponent(powers(), epsilon_L(L)),
                      [&](const Monomial& c) { return f(c); });
}

Element Comparison::psi(const Monomial& y) const {
    const Monomial key = key_of_page(y);
    const auto [alpha, L] = split_key(thh_, key);
    return divide_out(source_, page_, y, key, single_t_exponent(page_, gamma_L(L)),
                      [&](const Monomial& c) { return g(c); });
}

VerificationReport verify_gamma(const Comparison& C) {
    VerificationReport rep;
    const auto& thh = C.thh();
    const int p = static_cast<int>(C.p());
    const std::string pre = "gamma/" + thh.slug() + "/p" + std::to_string(p) + "/";
    for (const GenId g : thh.sigma_generators()) {
        const auto d = C.gamma_first_principles(g);
        rep.merge(d.report);
        const Element stated = C.gamma_generator(g);
        const Monomial m = stated.terms().begin()->first;
        const int ell = thh.weight(thh.sigma_source(g));
        rep.add(pre + thh.algebra().table()[g].name + "/filtration", "gamma(s(g)) has filtration -2(p-1)l",
                C.page().filtration(m) == -2 * (p - 1) * ell && C.page().bidegree(m).second == 2 * p * ell + 1);
        if (thh.spectrum() == Spectrum::BP)
            rep.add(pre + thh.algebra().table()[g].name + "/sign", "(-1)^l = +1 for l = p^k - 1",
                    stated.terms().begin()->second == 1);
    }
    for (const GenId g : thh.base_generators()) {
        // ω^t(e_0 ⊗ −) on the representative of the leading term 1 ⊗ g
        const auto& S = C.singer_base();
        const Element rep0 = S.representative(S.singer_class(0, 0, S.model().algebra().generator(g)));
        Element value;
        for (const auto& [m, c] : rep0.terms())
            C.page().algebra().axpy(value, c,
                                    omega_t_star(C.page(), 0, S.representatives().u_exponent(m),
                                                 S.representatives().t_exponent(m), S.representatives().model_part(m)));
        rep.add(pre + thh.algebra().table()[g].name + "/closed-form", "gamma(g) = (-1)^l t^{(p-1)l} (x) g^p",
                value == C.gamma_generator(g), C.page().to_text(value));
    }
    rep.add(pre + "unit", "gamma(1) = 1", C.gamma(thh.algebra().one()) == C.page().algebra().one());
    return rep;
}

namespace {

struct Image {
    std::uint32_t key = 0;
    Coeff coeff = 0;
    int dt = 0;
};

enum Kind { KS = 0, KT = 1, KG = 2 };

struct KeySpace {
    std::vector<Monomial> keys;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> id;
    // internal degree of the key's monomial in S, T and G
    std::vector<int> tdeg[3];
    std::vector<std::uint32_t> order[3];
    std::vector<std::uint32_t> rank[3];
    std::vector<int> sorted_t[3];
    // images at hat (i, 0): f, g on S keys; phi on T keys; psi on G keys
    std::vector<Image> fimg[2], gimg[2], phiimg[2], psiimg[2];
    std::vector<std::uint32_t> lmask;

    std::size_t dim(Kind k, int bound) const {
        return static_cast<std::size_t>(std::upper_bound(sorted_t[k].begin(), sorted_t[k].end(), bound) -
                                        sorted_t[k].begin());
    }
};

Image to_image(const KeySpace& K, const TateAlgebra& A, const Element& x, int i,
               const std::function<Monomial(const Monomial&)>& key_of) {
    if (x.size() != 1)
        throw ContractViolation("expected a single term, got " + A.to_text(x));
    const auto& [m, c] = *x.terms().begin();
    if (A.u_exponent(m) != i)
        throw ContractViolation("u exponent changed: " + A.to_text(x));
    const auto it = K.id.find(key_of(m));
    if (it == K.id.end())
        throw ContractViolation("image outside the key space: " + A.to_text(x));
    return {it->second, c, A.t_exponent(m)};
}

KeySpace build_keys(const Comparison& C, int max_key_degree, const Budget& budget) {
    KeySpace K;
    const auto& thh = C.thh();
    std::vector<GenId> gens(thh.algebra().table().size());
    for (GenId g = 0; g < gens.size(); ++g)
        gens[g] = g;
    K.keys = monomials_up_to(thh.algebra().table(), gens, max_key_degree);
    budget.check(K.keys.size(), "Segal key space");
    const auto n = K.keys.size();
    for (std::uint32_t k = 0; k < n; ++k)
        K.id.emplace(K.keys[k], k);
    for (auto& v : K.tdeg)
        v.resize(n);
    K.lmask.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        const Monomial& x = K.keys[k];
        K.tdeg[KS][k] = C.source().algebra().degree(C.source_monomial(x));
        K.tdeg[KT][k] = C.powers().algebra().degree(C.power_monomial(x));
        K.tdeg[KG][k] = C.page().algebra().degree(C.page_monomial(x));
        std::uint32_t mask = 0;
        for (std::size_t b = 0; b < thh.base_generators().size(); ++b)
            if (x.exponent(thh.sigma_of(thh.base_generators()[b])))
                mask |= 1u << b;
        K.lmask[k] = mask;
    }
    for (int kind = 0; kind < 3; ++kind) {
        auto& ord = K.order[kind];
        ord.resize(n);
        for (std::uint32_t k = 0; k < n; ++k)
            ord[k] = k;
        std::stable_sort(ord.begin(), ord.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return K.tdeg[kind][a] < K.tdeg[kind][b]; });
        K.rank[kind].resize(n);
        K.sorted_t[kind].resize(n);
        for (std::uint32_t j = 0; j < n; ++j) {
            K.rank[kind][ord[j]] = j;
            K.sorted_t[kind][j] = K.tdeg[kind][ord[j]];
        }
    }
    for (int i = 0; i <= 1; ++i) {
        K.fimg[i].resize(n);
        K.gimg[i].resize(n);
        K.phiimg[i].resize(n);
        K.psiimg[i].resize(n);
        for (std::uint32_t k = 0; k < n; ++k) {
            const Monomial& x = K.keys[k];
            const Monomial s = C.source().lift(i, 0, x);
            const auto source_key = [&](const Monomial& m) { return C.key_of_source(m); };
            K.fimg[i][k] = to_image(K, C.powers(), C.f(s), i, [&](const Monomial& m) { return C.key_of_power(m); });
            K.gimg[i][k] = to_image(K, C.page(), C.g(s), i, [&](const Monomial& m) { return C.key_of_page(m); });
            K.phiimg[i][k] = to_image(K, C.source(), C.phi(C.powers().lift(i, 0, x)), i, source_key);
            const Monomial y = C.page_monomial(x);
            K.psiimg[i][k] = to_image(K, C.source(), C.psi(C.page().lift(i, 0, C.page().model_part(y))), i, source_key);
        }
    }
    return K;
}

class CellMaps {
public:
    CellMaps(const KeySpace& K, const PrimeField& F, int d) : K_(K), F_(F), d_(d) {}

    std::size_t dim(Kind k, int floor) const { return K_.dim(k, d_ - floor); }

    SparseMatrix proj(Kind k, int from, int to) const {
        SparseMatrix M(dim(k, to), dim(k, from));
        for (std::size_t j = 0; j < M.cols() && j < M.rows(); ++j)
            M.set_column(j, SparseVector::unit(static_cast<Index>(j)));
        return M;
    }

    // map from kind `src` at floor `from` to kind `dst` at floor `to`
    SparseMatrix map(const std::vector<Image>* img, Kind src, int from, Kind dst, int to) const {
        SparseMatrix M(dim(dst, to), dim(src, from));
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const std::uint32_t key = K_.order[src][j];
            const auto [i, r] = TateAlgebra::hat_exponents(d_ - K_.tdeg[src][key]);
            const Image& im = img[i][key];
            const int s = -(i + 2 * (r + im.dt));
            if (s < to)
                continue;
            if (d_ - K_.tdeg[dst][im.key] != s)
                throw ContractViolation("image changes total degree");
            const auto row = K_.rank[dst][im.key];
            if (row >= M.rows())
                throw ContractViolation("image outside the quotient basis");
            M.set_column(j, SparseVector::unit(row, im.coeff));
        }
        return M;
    }

    SparseMatrix f(int floor) const { return map(K_.fimg, KS, floor, KT, floor); }
    SparseMatrix g(int floor) const { return map(K_.gimg, KS, floor, KG, floor); }
    SparseMatrix phi(int n, int N) const { return map(K_.phiimg, KT, N, KS, n); }
    SparseMatrix psi(int n, int N) const { return map(K_.psiimg, KG, N, KS, n); }

    std::set<std::uint32_t> masks(Kind k, int floor) const {
        std::set<std::uint32_t> out;
        for (std::size_t j = 0; j < dim(k, floor); ++j)
            out.insert(K_.lmask[K_.order[k][j]]);
        return out;
    }

private:
    const KeySpace& K_;
    const PrimeField& F_;
    int d_;
};

struct CellResult {
    int n = 0;
    int d = 0;
    // check name → counterexample (empty when it holds)
    std::vector<std::pair<std::string, bool>> checks;
    std::size_t dims[3] = {0, 0, 0};
};

std::uint32_t mask_of(const HomologyModel& thh, const IndexSequence& L) {
    std::uint32_t m = 0;
    const auto& base = thh.base_generators();
    for (const GenId g : L.generators)
        m |= 1u << static_cast<std::uint32_t>(std::find(base.begin(), base.end(), g) - base.begin());
    return m;
}

} // namespace

VerificationReport verify_segal(const Comparison& C, const SegalOptions& o) {
    if (o.floor > 0 || o.degree_max < o.floor)
        throw ConfigError("segal window needs floor <= 0 and degree_max >= floor");
    if (o.composite_span < 0)
        throw ConfigError("composite span must be nonnegative");
    const auto& thh = C.thh();
    const auto& F = thh.algebra().field();
    const int p = static_cast<int>(C.p());
    const std::string pre = "segal/" + to_string(thh.spectrum()) + "/p" + std::to_string(p) + "/";
    VerificationReport rep;

    int qmax = 0;
    for (const GenId g : thh.base_generators())
        qmax += 2 * thh.weight(g) + 1;
    const int span = o.degree_max - o.floor;
    const KeySpace K = build_keys(C, std::max(span, p * std::min(o.composite_span, span)) + qmax, o.budget);
    const std::size_t nbase = thh.base_generators().size();

    std::vector<std::pair<int, int>> cells;
    for (int n = o.floor; n <= 0; ++n)
        for (int d = n; d <= o.degree_max; ++d)
            cells.emplace_back(n, d);
    std::vector<CellResult> results(cells.size());
    const auto run = [&](std::size_t idx) {
        const auto [n, d] = cells[idx];
        CellResult& r = results[idx];
        r.n = n;
        r.d = d;
        const CellMaps M(K, F, d);
        const int N = segal_N(C.p(), n, d) + o.reindex_shift;
        const auto fN = M.f(N), fn = M.f(n), gN = M.g(N), gn = M.g(n);
        const auto phi = M.phi(n, N), psi = M.psi(n, N);
        r.checks.emplace_back("projection-phi-f", phi.compose(fN, F) == M.proj(KS, N, n));
        r.checks.emplace_back("projection-f-phi", fn.compose(phi, F) == M.proj(KT, N, n));
        r.checks.emplace_back("projection-psi-g", psi.compose(gN, F) == M.proj(KS, N, n));
        r.checks.emplace_back("projection-g-psi", gn.compose(psi, F) == M.proj(KG, N, n));
        r.checks.emplace_back("strict-f", fn.compose(M.proj(KS, N, n), F) == M.proj(KT, N, n).compose(fN, F) &&
                                              fn.compose(M.proj(KS, n - 1, n), F) ==
                                                  M.proj(KT, n - 1, n).compose(M.f(n - 1), F));
        r.checks.emplace_back("strict-g", gn.compose(M.proj(KS, N, n), F) == M.proj(KG, N, n).compose(gN, F) &&
                                              gn.compose(M.proj(KS, n - 1, n), F) ==
                                                  M.proj(KG, n - 1, n).compose(M.g(n - 1), F));
        const auto Phi = gn.compose(phi, F);
        const auto Psi = fn.compose(psi, F);
        r.checks.emplace_back("Phi-surjective", rank(Phi, F) == M.dim(KG, n));
        r.checks.emplace_back("Psi-surjective", rank(Psi, F) == M.dim(KT, n));
        if (d - n <= o.composite_span) {
            const int N2 = segal_N(C.p(), N, d);
            const auto PsiN = fN.compose(M.psi(N, N2), F);
            const auto PhiN = gN.compose(M.phi(N, N2), F);
            r.checks.emplace_back("pro-inverse-Phi-Psi", Phi.compose(PsiN, F) == M.proj(KG, N2, n));
            r.checks.emplace_back("pro-inverse-Psi-Phi", Psi.compose(PhiN, F) == M.proj(KT, N2, n));
        }

        // survival sets: realized sequences, the exact conditions, brute force over subsets
        std::set<std::uint32_t> eps_exact, gam_exact, gam_necessary, eps_lib, nec_lib;
        for (std::uint32_t mask = 0; mask < (1u << nbase); ++mask) {
            int w = 0, len = 0;
            for (std::size_t b = 0; b < nbase; ++b)
                if (mask & (1u << b)) {
                    w += thh.weight(thh.base_generators()[b]);
                    ++len;
                }
            if (2 * w + len <= d - n)
                eps_exact.insert(mask);
            if (2 * p * w + len <= p * (d - n))
                gam_exact.insert(mask);
            if (2 * w <= d - n)
                gam_necessary.insert(mask);
        }
        for (const auto& L : index_sequences(thh, d - n, 1))
            eps_lib.insert(mask_of(thh, L));
        for (const auto& L : index_sequences(thh, d - n, 0))
            nec_lib.insert(mask_of(thh, L));
        const auto eps_real = M.masks(KT, N);
        const auto gam_real = M.masks(KG, N);
        r.checks.emplace_back("survival-epsilon", eps_real == eps_exact && eps_lib == eps_exact);
        r.checks.emplace_back("survival-gamma",
                              gam_real == gam_exact && nec_lib == gam_necessary &&
                                  std::includes(gam_necessary.begin(), gam_necessary.end(), gam_real.begin(),
                                                gam_real.end()));
        r.dims[KS] = M.dim(KS, n);
        r.dims[KT] = M.dim(KT, n);
        r.dims[KG] = M.dim(KG, n);
    };

    const unsigned threads = std::max(1u, o.threads);
    if (threads == 1) {
        for (std::size_t k = 0; k < cells.size(); ++k)
            run(k);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t k = w; k < cells.size(); k += threads)
                        run(k);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    // aggregate per floor, in cell order
    const std::map<std::string, std::string> anchors = {
        {"projection-phi-f", "phi_{n,d} o f_{N,d} = F^N -> F^n on the source"},
        {"projection-f-phi", "f_{n,d} o phi_{n,d} = F^N -> F^n on R+(H(THH(B)))"},
        {"projection-psi-g", "psi_{n,d} o g_{N,d} = F^N -> F^n on the source"},
        {"projection-g-psi", "g_{n,d} o psi_{n,d} = F^N -> F^n on H^c(THH(B)^tCp)"},
        {"strict-f", "f commutes with the tower maps"},
        {"strict-g", "g commutes with the tower maps"},
        {"Phi-surjective", "rank Phi_{n,d} = dim F^n H^c(THH(B)^tCp)_d"},
        {"Psi-surjective", "rank Psi_{n,d} = dim F^n R+(H(THH(B)))_d"},
        {"pro-inverse-Phi-Psi", "Phi_{n,d} o Psi_{N,d} = F^{N(N,d)} -> F^n"},
        {"pro-inverse-Psi-Phi", "Psi_{n,d} o Phi_{N,d} = F^{N(N,d)} -> F^n"},
        {"survival-epsilon", "summand L survives iff 2|L| + r <= d - n"},
        {"survival-gamma", "summand L survives iff 2p|L| + r <= p(d - n), hence 2|L| <= d - n"},
    };
    std::map<std::pair<int, std::string>, std::string> failures;
    std::set<std::pair<int, std::string>> seen;
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& r : results) {
        for (const auto& [name, ok] : r.checks) {
            seen.emplace(r.n, name);
            if (!ok && !failures.count({r.n, name}))
                failures[{r.n, name}] = "d=" + std::to_string(r.d);
        }
        auto& row = dims["n" + std::to_string(r.n)];
        row["S"].push_back(r.dims[KS]);
        row["T"].push_back(r.dims[KT]);
        row["G"].push_back(r.dims[KG]);
    }
    for (const auto& [nk, name] : seen) {
        const auto it = failures.find({nk, name});
        char floor[16];
        std::snprintf(floor, sizeof floor, "n%+04d", nk);
        rep.add(pre + floor + "/" + name, anchors.at(name), it == failures.end(),
                it == failures.end() ? "" : it->second);
    }
    rep.set_dim(pre + "cells", cells.size());
    rep.set_dim(pre + "keys", K.keys.size());
    rep.set_dim(pre + "dims", dims);

    // bidegrees of ε_L and γ_L
    {
        bool ok = true;
        std::string cex;
        for (const auto& L : index_sequences(thh, 1 << 20, 1)) {
            const int w = L.weight, r = L.length();
            const auto e = C.epsilon_L(L);
            const auto gl = C.gamma_L(L);
            const auto be = C.powers().bidegree(e.terms().begin()->first);
            const auto bg = C.page().bidegree(gl.terms().begin()->first);
            const bool good = e.size() == 1 && gl.size() == 1 &&
                              be == std::pair{-(p - 1) * (2 * w + r), p * (2 * w + r)} &&
                              bg == std::pair{-2 * (p - 1) * w, 2 * p * w + r} &&
                              p * be.first + (p - 1) * be.second == 0 &&
                              p * bg.first + (p - 1) * (bg.second - r) == 0;
            if (!good && cex.empty())
                cex = C.powers().to_text(e) + " / " + C.page().to_text(gl);
            ok = ok && good;
        }
        rep.add(pre + "bidegrees", "eps_L in (-(p-1)(2|L|+r), p(2|L|+r)), gamma_L in (-2(p-1)|L|, 2p|L|+r)", ok, cex);
    }

    // γ_* = Φ_B ∘ ε_* on generators, leading terms
    {
        std::string cex;
        const auto Phi = [&](const Element& z) {
            // Φ at floor n = filtration of z, degree d = |z|
            Element out;
            for (const auto& [m, c] : z.terms()) {
                const int n = C.powers().filtration(m);
                const Element preimage = C.phi(m);
                for (const auto& [sm, sc] : preimage.terms()) {
                    if (C.source().filtration(sm) < n)
                        continue;
                    const Element image = C.g(sm);
                    for (const auto& [gm, gc] : image.terms())
                        if (C.page().filtration(gm) >= n)
                            out.add_term(gm, F.add(out.coeff(gm), F.mul(c, F.mul(sc, gc))), F);
                }
            }
            return out;
        };
        for (const GenId g : thh.sigma_generators()) {
            const Element lhs = Phi(C.singer_thh().sigma_representative(g));
            if (lhs != C.gamma_generator(g) && cex.empty())
                cex = thh.algebra().table()[g].name + ": " + C.page().to_text(lhs);
        }
        for (const GenId g : thh.base_generators()) {
            const auto& S = C.singer_thh();
            const Element lhs = Phi(S.representative(S.singer_class(0, 0, thh.algebra().generator(g))));
            if (lhs != C.gamma_generator(g) && cex.empty())
                cex = thh.algebra().table()[g].name + ": " + C.page().to_text(lhs);
        }
        if (Phi(C.powers().algebra().one()) != C.page().algebra().one() && cex.empty())
            cex = "1";
        rep.add(pre + "gamma-equals-Phi-epsilon", "gamma_* = Phi_B o epsilon_* on generators", cex.empty(), cex);
    }
    return rep;
}

} // namespace thhseg
