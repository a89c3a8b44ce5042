#include "thhseg/tate_algebra.hpp"

#include "thhseg/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace thhseg {

namespace {

std::shared_ptr<const GeneratorTable> tate_table(const HomologyModel& model, TateKind kind) {
    auto t = std::make_shared<GeneratorTable>();
    t->add("u", -1, Parity::Odd);
    t->add("t", -2, Parity::Even, true);
    const auto p = static_cast<int>(model.p());
    for (const auto& g : model.algebra().table().generators()) {
        const bool sigma = g.name.rfind("s(", 0) == 0;
        const bool power = kind == TateKind::Power || (kind == TateKind::Source && !sigma);
        if (power)
            t->add("P(" + g.name + ")", p * g.degree);
        else
            t->add(g.name, g.degree);
    }
    return t;
}

} // namespace

TateAlgebra::TateAlgebra(const HomologyModel& model, TateKind kind)
    : model_(std::make_shared<const HomologyModel>(model)), kind_(kind),
      algebra_(model.algebra().field(), tate_table(model, kind)) {}

Monomial TateAlgebra::lift(int i, int r, const Monomial& x) const {
    if (i < 0 || i > 1)
        throw ContractViolation("u exponent must be 0 or 1");
    std::vector<Monomial::Factor> f;
    if (i)
        f.emplace_back(u_id, 1);
    if (r)
        f.emplace_back(t_id, r);
    for (const auto& [g, e] : x.factors())
        f.emplace_back(g + offset, e);
    return Monomial::from_factors(std::move(f));
}

Element TateAlgebra::lift(int i, int r, const Element& x) const {
    Element out;
    for (const auto& [m, c] : x.terms())
        out.add_term(lift(i, r, m), c, algebra_.field());
    return out;
}

Monomial TateAlgebra::model_part(const Monomial& m) const {
    std::vector<Monomial::Factor> f;
    for (const auto& [g, e] : m.factors())
        if (g >= offset)
            f.emplace_back(g - offset, e);
    return Monomial::from_factors(std::move(f));
}

std::pair<int, int> TateAlgebra::bidegree(const Monomial& m) const {
    const int s = filtration(m);
    return {s, algebra_.degree(m) - s};
}

std::pair<int, int> TateAlgebra::hat_exponents(int s) {
    // s = −(i + 2r): i is the parity of s
    const int i = ((s % 2) + 2) % 2;
    return {i, -(s + i) / 2};
}

Element TateAlgebra::shift(const Element& x, int i, int r) const {
    std::vector<Monomial::Factor> f;
    if (i)
        f.emplace_back(u_id, i);
    if (r)
        f.emplace_back(t_id, r);
    return algebra_.multiply(algebra_.monomial(Monomial::from_factors(std::move(f))), x);
}

std::string TateAlgebra::to_text(const Monomial& m) const {
    const int i = u_exponent(m);
    const int r = t_exponent(m);
    std::string hat;
    if (i)
        hat = "u";
    if (r) {
        if (!hat.empty())
            hat += "*";
        hat += r == 1 ? "t" : "t^" + std::to_string(r);
    }
    if (hat.empty())
        hat = "1";
    return hat + " ⊗ " + algebra_.to_text(Monomial::from_factors([&] {
               std::vector<Monomial::Factor> f;
               for (const auto& fac : m.factors())
                   if (fac.first >= offset)
                       f.push_back(fac);
               return f;
           }()));
}

std::string TateAlgebra::to_text(const Element& x) const {
    if (x.is_zero())
        return "0";
    std::vector<Monomial> ms;
    for (const auto& [m, c] : x.terms())
        ms.push_back(m);
    // by filtration, highest first, then canonical order
    std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
        if (filtration(a) != filtration(b))
            return filtration(a) > filtration(b);
        return CanonicalOrder{&algebra_.table()}(a, b);
    });
    std::string out;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        std::int64_t c = algebra_.field().symmetric(x.coeff(ms[k]));
        const bool neg = c < 0;
        if (neg)
            c = -c;
        out += k == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (c != 1)
            out += std::to_string(c) + "*";
        out += to_text(ms[k]);
    }
    return out;
}

nlohmann::json TateAlgebra::to_json(const Element& x) const {
    nlohmann::json arr = nlohmann::json::array();
    std::vector<Monomial> ms;
    for (const auto& [m, c] : x.terms())
        ms.push_back(m);
    std::sort(ms.begin(), ms.end(), CanonicalOrder{&algebra_.table()});
    for (const auto& m : ms) {
        nlohmann::json exps = nlohmann::json::object();
        const Monomial part = model_part(m);
        for (const auto& [g, e] : part.factors())
            exps[algebra_.table()[g + offset].name] = e;
        arr.push_back({{"coeff", x.coeff(m)},
                       {"u", u_exponent(m)},
                       {"t", t_exponent(m)},
                       {"filtration", filtration(m)},
                       {"exps", exps}});
    }
    return arr;
}

} // namespace thhseg
