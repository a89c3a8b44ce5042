#include "thhseg/element.hpp"

#include "thhseg/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace thhseg {

Coeff Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Element::add_term(const Monomial& m, Coeff c, const PrimeField& field) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = field.add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

GradedAlgebra::GradedAlgebra(PrimeField field, std::shared_ptr<const GeneratorTable> table)
    : field_(field), table_(std::move(table)) {
    if (!table_)
        throw ContractViolation("graded algebra needs a generator table");
}

Element GradedAlgebra::scalar(std::int64_t c) const {
    Element e;
    e.add_term(Monomial{}, field_.from_int(c), field_);
    return e;
}

Element GradedAlgebra::generator(GenId g) const {
    table_->at(g);
    return monomial(Monomial::generator(g));
}

Element GradedAlgebra::generator(std::string_view name) const {
    return generator(table_->resolve(name));
}

Element GradedAlgebra::monomial(const Monomial& m, Coeff c) const {
    for (const auto& f : m.factors())
        table_->at(f.first);
    Element e;
    if (!violates_relations(m, *table_))
        e.add_term(m, c % field_.p(), field_);
    return e;
}

Element GradedAlgebra::add(const Element& a, const Element& b) const {
    Element out = a;
    axpy(out, 1, b);
    return out;
}

Element GradedAlgebra::sub(const Element& a, const Element& b) const {
    Element out = a;
    axpy(out, field_.neg(1), b);
    return out;
}

Element GradedAlgebra::neg(const Element& a) const { return scale(a, field_.neg(1)); }

Element GradedAlgebra::scale(const Element& a, Coeff c) const {
    Element out;
    if (c % field_.p() == 0)
        return out;
    for (const auto& [m, x] : a.terms())
        out.add_term(m, field_.mul(x, c), field_);
    return out;
}

void GradedAlgebra::axpy(Element& a, Coeff c, const Element& b) const {
    if (c == 0)
        return;
    for (const auto& [m, x] : b.terms())
        a.add_term(m, field_.mul(x, c), field_);
}

Element GradedAlgebra::multiply(const Monomial& a, const Monomial& b) const {
    Element out;
    if (auto prod = thhseg::multiply(a, b, *table_))
        out.add_term(prod->monomial, prod->negative ? field_.neg(1) : 1, field_);
    return out;
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto prod = thhseg::multiply(ma, mb, *table_);
            if (!prod)
                continue;
            Coeff c = field_.mul(ca, cb);
            out.add_term(prod->monomial, prod->negative ? field_.neg(c) : c, field_);
        }
    }
    return out;
}

Element GradedAlgebra::power(const Element& a, unsigned n) const {
    Element result = one();
    Element base = a;
    while (n > 0) {
        if (n & 1U)
            result = multiply(result, base);
        n >>= 1U;
        if (n > 0)
            base = multiply(base, base);
    }
    return result;
}

bool GradedAlgebra::is_homogeneous(const Element& a) const {
    std::optional<int> d;
    for (const auto& [m, c] : a.terms()) {
        int dm = degree(m);
        if (d && *d != dm)
            return false;
        d = dm;
    }
    return true;
}

std::optional<int> GradedAlgebra::degree(const Element& a) const {
    if (a.is_zero())
        return std::nullopt;
    if (!is_homogeneous(a))
        throw ContractViolation("element is not homogeneous: " + to_text(a));
    return degree(a.terms().begin()->first);
}

std::vector<Monomial> GradedAlgebra::basis(int degree) const {
    return monomials_of_degree(*table_, degree);
}

Element GradedAlgebra::map(const Element& a, const GradedAlgebra& target,
                           const std::function<Element(GenId)>& on_generator) const {
    std::map<GenId, Element> images;
    auto image = [&](GenId g) -> const Element& {
        auto it = images.find(g);
        if (it == images.end())
            it = images.emplace(g, on_generator(g)).first;
        return it->second;
    };
    Element out;
    for (const auto& [m, c] : a.terms()) {
        Element value = target.scalar(c);
        for (const auto& [g, e] : m.factors()) {
            if (e < 0)
                throw UnsupportedCase("homomorphism on negative power of '" + table_->at(g).name + "'");
            value = target.multiply(value, target.power(image(g), static_cast<unsigned>(e)));
            if (value.is_zero())
                break;
        }
        target.axpy(out, 1, value);
    }
    return out;
}

Element GradedAlgebra::derive(const Element& a, int derivation_degree,
                              const std::function<Element(GenId)>& on_generator) const {
    Element out;
    for (const auto& [m, c] : a.terms()) {
        auto factors = m.factors();
        int prefix_degree = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto [g, e] = factors[i];
            const auto& gen = table_->at(g);
            Element dg = on_generator(g);
            if (!dg.is_zero()) {
                // D(g^e) = e·g^{e−1}·D(g) for even g; odd g has e = 1.
                Coeff k = field_.mul(c, field_.from_int(e));
                if (derivation_degree % 2 != 0 && prefix_degree % 2 != 0)
                    k = field_.neg(k);
                if (k != 0) {
                    std::vector<Monomial::Factor> before(factors.begin(), factors.begin() + i);
                    std::vector<Monomial::Factor> after(factors.begin() + i + 1, factors.end());
                    Element left = monomial(Monomial::from_factors(before));
                    Element mid = monomial(Monomial::generator(g, e - 1));
                    Element right = monomial(Monomial::from_factors(after));
                    Element term = multiply(multiply(multiply(left, mid), dg), right);
                    axpy(out, k, term);
                }
            }
            prefix_degree += gen.degree * e;
        }
    }
    return out;
}

namespace {

std::string join_signed(const std::vector<std::pair<bool, std::string>>& terms) {
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [negative, body] = terms[i];
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += body;
    }
    return out;
}

std::string with_coefficient(std::int64_t magnitude, const std::string& body) {
    if (body == "1")
        return std::to_string(magnitude);
    if (magnitude == 1)
        return body;
    return std::to_string(magnitude) + "*" + body;
}

std::vector<Monomial> sorted_monomials(const Element& a, const GeneratorTable& table) {
    std::vector<Monomial> ms;
    ms.reserve(a.size());
    for (const auto& [m, c] : a.terms())
        ms.push_back(m);
    std::sort(ms.begin(), ms.end(), CanonicalOrder{&table});
    return ms;
}

} // namespace

std::string GradedAlgebra::to_text(const Monomial& m) const {
    if (m.is_one())
        return "1";
    std::string out;
    for (const auto& [g, e] : m.factors()) {
        if (!out.empty())
            out += "*";
        out += table_->at(g).name;
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string GradedAlgebra::to_text(const Element& a) const {
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& m : sorted_monomials(a, *table_)) {
        std::int64_t c = field_.symmetric(a.coeff(m));
        terms.emplace_back(c < 0, with_coefficient(c < 0 ? -c : c, to_text(m)));
    }
    return join_signed(terms);
}

nlohmann::json GradedAlgebra::to_json(const Element& a) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : sorted_monomials(a, *table_)) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [g, e] : m.factors())
            exps[table_->at(g).name] = e;
        arr.push_back({{"coeff", a.coeff(m)}, {"exps", exps}});
    }
    return arr;
}

Element GradedAlgebra::from_json(const nlohmann::json& j) const {
    Element out;
    for (const auto& term : j) {
        std::vector<Monomial::Factor> factors;
        for (const auto& [name, e] : term.at("exps").items())
            factors.emplace_back(table_->resolve(name), e.get<int>());
        axpy(out, field_.from_int(term.at("coeff").get<std::int64_t>()),
             monomial(Monomial::from_factors(std::move(factors))));
    }
    return out;
}

namespace {

std::shared_ptr<GeneratorTable> disjoint_union(const GeneratorTable& a, const GeneratorTable& b) {
    auto out = std::make_shared<GeneratorTable>();
    for (const auto& g : a.generators())
        out->add("L." + g.name, g.degree, g.parity, g.laurent);
    for (const auto& g : b.generators())
        out->add("R." + g.name, g.degree, g.parity, g.laurent && !a.laurent());
    return out;
}

} // namespace

TensorAlgebra::TensorAlgebra(const GradedAlgebra& left, const GradedAlgebra& right)
    : left_(left), right_(right),
      combined_(left.field(), disjoint_union(left.table(), right.table())),
      offset_(static_cast<GenId>(left.table().size())) {
    if (!(left.field() == right.field()))
        throw ContractViolation("tensor factors over different primes");
    if (left.table().laurent() && right.table().laurent())
        throw UnsupportedCase("tensor product of two Laurent algebras");
}

Monomial TensorAlgebra::tensor(const Monomial& l, const Monomial& r) const {
    std::vector<Monomial::Factor> factors(l.factors().begin(), l.factors().end());
    for (const auto& [g, e] : r.factors())
        factors.emplace_back(g + offset_, e);
    return Monomial::from_factors(std::move(factors));
}

Element TensorAlgebra::tensor(const Element& l, const Element& r) const {
    Element out;
    const auto& F = combined_.field();
    for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms())
            out.add_term(tensor(ml, mr), F.mul(cl, cr), F);
    return out;
}

std::pair<Monomial, Monomial> TensorAlgebra::split(const Monomial& m) const {
    std::vector<Monomial::Factor> l;
    std::vector<Monomial::Factor> r;
    for (const auto& [g, e] : m.factors()) {
        if (g < offset_)
            l.emplace_back(g, e);
        else
            r.emplace_back(g - offset_, e);
    }
    return {Monomial::from_factors(std::move(l)), Monomial::from_factors(std::move(r))};
}

Element TensorAlgebra::inject_left(const Element& l) const { return tensor(l, right_.one()); }

Element TensorAlgebra::inject_right(const Element& r) const { return tensor(left_.one(), r); }

Element TensorAlgebra::map_right(const Element& x,
                                 const std::function<Element(const Monomial&)>& f,
                                 const TensorAlgebra& target) const {
    Element out;
    const auto& F = combined_.field();
    for (const auto& [m, c] : x.terms()) {
        auto [l, r] = split(m);
        const Element image = f(r);
        for (const auto& [mr, cr] : image.terms())
            out.add_term(target.tensor(l, mr), F.mul(c, cr), F);
    }
    return out;
}

Element TensorAlgebra::map_left(const Element& x,
                                const std::function<Element(const Monomial&)>& f,
                                const TensorAlgebra& target) const {
    Element out;
    const auto& F = combined_.field();
    for (const auto& [m, c] : x.terms()) {
        auto [l, r] = split(m);
        const Element image = f(l);
        for (const auto& [ml, cl] : image.terms())
            out.add_term(target.tensor(ml, r), F.mul(c, cl), F);
    }
    return out;
}

std::string TensorAlgebra::to_text(const Element& x) const {
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& m : sorted_monomials(x, combined_.table())) {
        std::int64_t c = combined_.field().symmetric(x.coeff(m));
        auto [l, r] = split(m);
        std::string body = with_coefficient(c < 0 ? -c : c, left_.to_text(l)) + " ⊗ " + right_.to_text(r);
        terms.emplace_back(c < 0, body);
    }
    return join_signed(terms);
}

nlohmann::json TensorAlgebra::to_json(const Element& x) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : sorted_monomials(x, combined_.table())) {
        auto [l, r] = split(m);
        arr.push_back({{"coeff", x.coeff(m)},
                       {"left", left_.to_json(left_.monomial(l))[0]["exps"]},
                       {"right", right_.to_json(right_.monomial(r))[0]["exps"]}});
    }
    return arr;
}

} // namespace thhseg
