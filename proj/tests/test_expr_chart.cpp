#include <doctest.h>
#include <thhseg/chart.hpp>
#include <thhseg/errors.hpp>
#include <thhseg/expr.hpp>
#include <thhseg/tate_algebra.hpp>

using namespace thhseg;

namespace {

const HomologyModel& thh_mu() {
    static const HomologyModel M = HomologyModel::mu(PrimeField(3), 3).thh();
    return M;
}

} // namespace

TEST_CASE("class expressions in a model") {
    const auto& A = thh_mu().algebra();
    CHECK(A.to_text(parse_class(A, "m1")) == "m1");
    CHECK(parse_class(A, " 2 * m1 ^ 2 * s ( m2 ) ") == parse_class(A, "2*m1^2*s(m2)"));
    CHECK(parse_class(A, "m1*m1") == parse_class(A, "m1^2"));
    CHECK(parse_class(A, "m1 + m1 + m1").is_zero());
    CHECK(parse_class(A, "-m1 + m2") == A.sub(A.generator("m2"), A.generator("m1")));
    CHECK(parse_class(A, "4") == A.one());
    CHECK(parse_class(A, "s(m1)*s(m1)").is_zero());
    // xi1 = m2 at p = 3
    CHECK(parse_class(A, "s(xi1)") == parse_class(A, "s(m2)"));
    CHECK(parse_class(A, "s(m1)*m1") == A.neg(parse_class(A, "-m1*s(m1)")));
}

TEST_CASE("class expressions in the Tate page") {
    const TateAlgebra page(thh_mu(), TateKind::Page);
    const auto& A = page.algebra();
    CHECK(page.to_text(parse_class(A, "t^0*m1")) == "1 ⊗ m1");
    CHECK(page.to_text(parse_class(A, "u*t^-2*m1")) == "u*t^-2 ⊗ m1");
    CHECK(parse_class(A, "t^{-2}") == parse_class(A, "t^-2"));
    CHECK(parse_class(A, "t^2*t^-2") == A.one());
}

TEST_CASE("parse errors carry the position") {
    const auto& A = thh_mu().algebra();
    auto position = [&](const char* text) -> long {
        try {
            (void)parse_class(A, text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position("m1 + * m2") == 5);
    CHECK(position("") == 0);
    CHECK(position("m1^") == 3);
    CHECK(position("s(m1") == 4);
    CHECK(position("m1 m2") == 3);
    CHECK(position("m1^-1") == 0);
    CHECK(position("m1 )") == 3);
    CHECK_THROWS_AS(parse_class(A, "m7"), ResolutionError);
    CHECK_THROWS_AS(parse_class(A, "s(q)"), ResolutionError);
    CHECK_THROWS_AS(parse_class(A, "u"), ResolutionError);
}

TEST_CASE("E3 chart matches a direct count of surviving monomials") {
    const auto& M = thh_mu();
    const TateWindow w{-8, 0, -8, 14};
    const Chart c = make_chart(M, 3, w);
    CHECK(c.model == "thh-mu");
    CHECK(c.cells.size() == w.bidegrees().size());
    std::size_t determined = 0;
    for (const auto& cell : c.cells) {
        if (cell.undetermined)
            continue;
        ++determined;
        // monomials whose base exponents are ≡ 0 mod 3 without s(g), ≡ 2 with s(g)
        std::size_t expected = 0;
        for (const auto& m : M.algebra().basis(cell.t)) {
            bool ok = true;
            for (const auto& [g, e] : m.factors()) {
                if (M.is_sigma(g)) {
                    ok = ok && m.exponent(M.sigma_source(g)) % 3 == 2;
                } else {
                    const bool has_sigma = m.exponent(M.sigma_of(g)) != 0;
                    ok = ok && e % 3 == (has_sigma ? 2 : 0);
                }
            }
            expected += ok ? 1 : 0;
        }
        CHECK_MESSAGE(cell.dim == expected, "s=" << cell.s << " t=" << cell.t);
    }
    CHECK(determined > 20);
}

TEST_CASE("chart formats") {
    const Chart c = make_chart(thh_mu(), 3, {-4, 0, -4, 6});
    const std::string once = to_json(c).dump(2);
    const Chart back = chart_from_json(nlohmann::json::parse(once));
    CHECK(back == c);
    CHECK(to_json(back).dump(2) == once);
    CHECK(to_json(c)["schema"] == "thhseg.chart/1");

    const std::string tsv = to_tsv(c);
    CHECK(tsv.rfind("s\tt\tdegree\tdim\tundetermined\n", 0) == 0);
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == static_cast<long>(c.cells.size()) + 1);
    CHECK(to_svg(c) == to_svg(back));
    CHECK(to_svg(c).rfind("<svg", 0) == 0);
    CHECK(to_text(c).find("thh-mu p=3 page 3") == 0);

    const Chart e2 = make_chart(thh_mu(), 2, {-4, 0, -4, 6});
    for (std::size_t k = 0; k < c.cells.size(); ++k)
        CHECK(e2.cells[k].dim >= c.cells[k].dim);
}

TEST_CASE("chart edge cases") {
    const Chart empty = make_chart(thh_mu(), 3, {0, -1, 0, 10});
    CHECK(empty.cells.empty());
    CHECK(chart_from_json(to_json(empty)) == empty);
    CHECK_THROWS_AS(make_chart(thh_mu(), 3, {-24, 0, -24, 48}, Budget{100}), ResourceError);
    CHECK_THROWS_AS(make_chart(thh_mu(), 4, {-4, 0, -4, 6}), ConfigError);
    CHECK_THROWS_AS(make_chart(HomologyModel::mu(PrimeField(3), 3), 3, {-4, 0, -4, 6}), ConfigError);
    auto j = to_json(empty);
    j["schema"] = "thhseg.chart/0";
    CHECK_THROWS_AS(chart_from_json(j), ConfigError);
    j = to_json(empty);
    j.erase("window");
    CHECK_THROWS_AS(chart_from_json(j), ParseError);
}
