#include "thhseg/monomial.hpp"

#include "thhseg/errors.hpp"

#include <algorithm>

namespace thhseg {

Monomial Monomial::generator(GenId g, int exponent) {
    Monomial m;
    if (exponent != 0)
        m.factors_.emplace_back(g, exponent);
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [g, e] : factors) {
        if (!m.factors_.empty() && m.factors_.back().first == g)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(g, e);
    }
    std::erase_if(m.factors_, [](const Factor& f) { return f.second == 0; });
    return m;
}

int Monomial::exponent(GenId g) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                               [](const Factor& f, GenId id) { return f.first < id; });
    return (it != factors_.end() && it->first == g) ? it->second : 0;
}

Monomial Monomial::with_exponent(GenId g, int exponent) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + 1);
    bool placed = false;
    for (const auto& f : factors_) {
        if (!placed && f.first >= g) {
            if (exponent != 0)
                m.factors_.emplace_back(g, exponent);
            placed = true;
            if (f.first == g)
                continue;
        }
        m.factors_.push_back(f);
    }
    if (!placed && exponent != 0)
        m.factors_.emplace_back(g, exponent);
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            m.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            m.factors_.push_back(*b++);
        } else {
            if (int e = a->second + b->second; e != 0)
                m.factors_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return m;
}

Monomial Monomial::scaled(int k) const {
    if (k == 0)
        return {};
    Monomial m = *this;
    for (auto& f : m.factors_)
        f.second *= k;
    return m;
}

Monomial Monomial::restricted(const std::function<bool(GenId)>& keep) const {
    Monomial m;
    for (const auto& f : factors_)
        if (keep(f.first))
            m.factors_.push_back(f);
    return m;
}

int degree(const Monomial& m, const GeneratorTable& table) {
    int d = 0;
    for (const auto& [g, e] : m.factors())
        d += table.at(g).degree * e;
    return d;
}

bool violates_relations(const Monomial& m, const GeneratorTable& table) {
    for (const auto& [g, e] : m.factors()) {
        const auto& gen = table.at(g);
        if (gen.odd() && (e < 0 || e > 1))
            return true;
        if (!gen.laurent && e < 0)
            return true;
    }
    return false;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = degree(a, *table);
    const int db = degree(b, *table);
    if (da != db)
        return da < db;
    auto fa = a.factors();
    auto fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        GenId ga = i < fa.size() ? fa[i].first : GenId(-1);
        GenId gb = j < fb.size() ? fb[j].first : GenId(-1);
        GenId g = std::min(ga, gb);
        int ea = (ga == g) ? fa[i].second : 0;
        int eb = (gb == g) ? fb[j].second : 0;
        if (ea != eb)
            return ea > eb;
        if (ga == g)
            ++i;
        if (gb == g)
            ++j;
    }
    return false;
}

std::optional<SignedMonomial> multiply(const Monomial& a, const Monomial& b,
                                       const GeneratorTable& table) {
    // Moving each odd factor of b left past the odd factors of a with larger id.
    int odd_in_a_after = 0;
    for (const auto& [g, e] : a.factors())
        if (table.at(g).odd())
            ++odd_in_a_after;
    long swaps = 0;
    auto ia = a.factors().begin();
    for (const auto& [g, e] : b.factors()) {
        while (ia != a.factors().end() && ia->first <= g) {
            if (table[ia->first].odd()) {
                if (ia->first == g && table.at(g).odd())
                    return std::nullopt;
                --odd_in_a_after;
            }
            ++ia;
        }
        if (table.at(g).odd())
            swaps += odd_in_a_after;
    }
    SignedMonomial out{a.times(b), (swaps % 2) != 0};
    return out;
}

namespace {

void enumerate(const GeneratorTable& table, std::span<const GenId> gens, std::size_t index,
               int remaining, bool exact, std::vector<Monomial::Factor>& current,
               std::vector<Monomial>& out) {
    if (index == gens.size()) {
        if (!exact || remaining == 0)
            out.push_back(Monomial::from_factors(current));
        return;
    }
    const auto& g = table.at(gens[index]);
    const int max_exp = g.odd() ? 1 : remaining / g.degree;
    for (int e = 0; e <= max_exp && e * g.degree <= remaining; ++e) {
        if (e > 0)
            current.emplace_back(gens[index], e);
        enumerate(table, gens, index + 1, remaining - e * g.degree, exact, current, out);
        if (e > 0)
            current.pop_back();
    }
}

void check_positive(const GeneratorTable& table, std::span<const GenId> gens) {
    for (GenId g : gens) {
        const auto& gen = table.at(g);
        if (gen.degree <= 0 || gen.laurent)
            throw ContractViolation("basis enumeration needs positive-degree generators; '" +
                                    gen.name + "' has degree " + std::to_string(gen.degree));
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(const GeneratorTable& table, int degree) {
    std::vector<GenId> gens(table.size());
    for (GenId g = 0; g < gens.size(); ++g)
        gens[g] = g;
    check_positive(table, gens);
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    std::vector<Monomial::Factor> current;
    enumerate(table, gens, 0, degree, true, current, out);
    std::sort(out.begin(), out.end(), CanonicalOrder{&table});
    return out;
}

std::vector<Monomial> monomials_up_to(const GeneratorTable& table, std::span<const GenId> gens,
                                      int max_degree) {
    check_positive(table, gens);
    std::vector<Monomial> out;
    if (max_degree < 0)
        return out;
    std::vector<Monomial::Factor> current;
    enumerate(table, gens, 0, max_degree, false, current, out);
    std::sort(out.begin(), out.end(), CanonicalOrder{&table});
    return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& [g, e] : m.factors()) {
        h ^= (static_cast<std::size_t>(g) << 32) ^ static_cast<std::uint32_t>(e);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace thhseg
