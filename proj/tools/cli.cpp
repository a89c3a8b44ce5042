#include "cli.hpp"

#include <CLI11.hpp>
#include <thhseg/chart.hpp>
#include <thhseg/comparison.hpp>
#include <thhseg/errors.hpp>
#include <thhseg/expr.hpp>
#include <thhseg/singer.hpp>
#include <thhseg/steenrod.hpp>
#include <thhseg/suites.hpp>
#include <thhseg/tate_ss.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace thhseg::cli {

namespace {

struct Options {
    std::uint32_t p = 3;
    std::string spectrum;
    int ell_max = 3;
    int k_max = 0;
    int degree_max = 0;
    int degree_min = 0;
    int floor = -24;
    int s_max = 0;
    int composite_span = 0;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool random_units = false;
    int reindex_shift = 0;
    std::string format = "json";
    std::string out;
    std::string suite = "all";
    int page = 3;
    std::string op;
    std::string expr;
    unsigned r = 0;
    CLI::Option* degree_max_opt = nullptr;
    CLI::Option* degree_min_opt = nullptr;
    CLI::Option* k_max_opt = nullptr;
    CLI::Option* r_opt = nullptr;
    CLI::Option* composite_span_opt = nullptr;
};

RunConfig run_config(const Options& o) {
    RunConfig c;
    c.p = o.p;
    if (!o.spectrum.empty())
        c.spectrum = parse_spectrum(o.spectrum.rfind("thh-", 0) == 0 ? o.spectrum.substr(4) : o.spectrum);
    c.ell_max = o.ell_max;
    if (o.k_max_opt->count() > 0)
        c.k_max = o.k_max;
    if (o.degree_max_opt->count() > 0)
        c.degree_max = o.degree_max;
    c.floor = o.floor;
    if (o.composite_span_opt->count() > 0)
        c.composite_span = o.composite_span;
    c.seed = o.seed;
    c.reindex_shift = o.reindex_shift;
    c.random_units = o.random_units;
    c.threads = std::max(1U, o.threads);
    c.budget = Budget::from_env();
    return c;
}

HomologyModel base_model(const RunConfig& c) {
    const Spectrum s = c.spectrum.value_or(Spectrum::MU);
    const PrimeField F(c.p);
    return s == Spectrum::MU ? HomologyModel::mu(F, c.ell_max) : HomologyModel::bp(F, c.resolved_k_max());
}

std::string report_text(const VerificationReport& rep) {
    std::ostringstream out;
    const auto j = rep.to_json();
    for (const auto& c : j["checks"]) {
        out << (c["status"] == "pass" ? "PASS " : "FAIL ") << c["id"].get<std::string>();
        if (!c["counterexample"].is_null())
            out << "  " << c["counterexample"].get<std::string>();
        out << '\n';
    }
    out << (rep.pass() ? "PASS" : "FAIL") << ": " << rep.checks().size() - rep.failures() << "/"
        << rep.checks().size() << " checks\n";
    return out.str();
}

std::string report_tsv(const VerificationReport& rep) {
    std::ostringstream out;
    out << "id\tstatus\tanchor\tcounterexample\n";
    for (const auto& c : rep.to_json()["checks"])
        out << c["id"].get<std::string>() << '\t' << c["status"].get<std::string>() << '\t'
            << c["anchor"].get<std::string>() << '\t'
            << (c["counterexample"].is_null() ? "" : c["counterexample"].get<std::string>()) << '\n';
    return out.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw ConfigError("cannot open '" + o.out + "' for writing");
    f << text;
    if (!f)
        throw ResourceError("failed writing '" + o.out + "'");
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw ConfigError("unknown suite '" + o.suite + "'");
    const VerificationReport rep = run_suite(o.suite, run_config(o));
    if (o.format == "json")
        emit(o, rep.to_json().dump(2) + "\n", out);
    else if (o.format == "text")
        emit(o, report_text(rep), out);
    else if (o.format == "tsv")
        emit(o, report_tsv(rep), out);
    else
        throw ConfigError("verify supports json, text and tsv output");
    return rep.pass() ? Ok : Failed;
}

TateWindow chart_window(const Options& o) {
    const int degree_max = o.degree_max_opt->count() > 0 ? o.degree_max : 24;
    const int degree_min = o.degree_min_opt->count() > 0 ? o.degree_min : o.floor;
    return {o.floor, o.s_max, degree_min, degree_max};
}

int cmd_chart(const Options& o, std::ostream& out) {
    const RunConfig c = run_config(o);
    c.validate();
    const HomologyModel thh = base_model(c).thh();
    const TateWindow w = chart_window(o);
    const Chart chart = make_chart(thh, o.page, w, c.budget);
    if (o.format == "json")
        emit(o, to_json(chart).dump(2) + "\n", out);
    else if (o.format == "tsv")
        emit(o, to_tsv(chart), out);
    else if (o.format == "text")
        emit(o, to_text(chart), out);
    else if (o.format == "svg" || o.format == "svg-chart")
        emit(o, to_svg(chart), out);
    else
        throw ConfigError("unknown format '" + o.format + "'");
    return Ok;
}

int cmd_tate_page(const Options& o, std::ostream& out) {
    const RunConfig c = run_config(o);
    c.validate();
    if (o.page != 2 && o.page != 3)
        throw ConfigError("only pages 2 and 3 are computed");
    const HomologyModel thh = base_model(c).thh();
    const TateWindow w = chart_window(o);
    nlohmann::json cells = nlohmann::json::object();
    std::vector<std::string> undetermined;
    if (!w.empty()) {
        std::size_t size = 0;
        for (const auto& [s, t] : w.padded(2, 1).bidegrees())
            size += thh.algebra().basis(t).size();
        c.budget.check(size, "Tate page window");
        const TatePage P = o.page == 2 ? e2_page(thh, w) : e3_page(thh, w);
        for (const auto& [bd, cell] : P.cells) {
            const std::string key = std::to_string(bd.first) + "," + std::to_string(bd.second);
            if (cell.undetermined)
                undetermined.push_back(key);
            if (cell.classes.empty())
                continue;
            std::vector<std::string> classes;
            for (const auto& x : cell.classes)
                classes.push_back(P.algebra->to_text(x));
            cells[key] = classes;
        }
    }
    const nlohmann::json j = {{"schema", "thhseg.page/1"},
                              {"model", "thh-" + to_string(thh.spectrum())},
                              {"p", c.p},
                              {"page", o.page},
                              {"window",
                               {{"s_min", w.s_min},
                                {"s_max", w.s_max},
                                {"degree_min", w.degree_min},
                                {"degree_max", w.degree_max}}},
                              {"classes", cells},
                              {"undetermined", undetermined}};
    if (o.format == "json")
        emit(o, j.dump(2) + "\n", out);
    else if (o.format == "tsv")
        emit(o, to_tsv(make_chart(thh, o.page, w, c.budget)), out);
    else
        throw ConfigError("tate-ss page supports json and tsv output");
    return Ok;
}

int steenrod_bound(const RunConfig& c) {
    int q = 1;
    for (int i = 0; i < c.resolved_k_max(); ++i)
        q *= static_cast<int>(c.p);
    return 2 * (q - 1) * static_cast<int>(c.p);
}

struct EvalResult {
    std::string text;
    std::string provenance;
};

EvalResult evaluate(const Options& o, const RunConfig& c) {
    if (o.op == "coproduct") {
        const DualSteenrodAlgebra A(PrimeField(c.p), steenrod_bound(c));
        const Element x = parse_class(A.conjugate(), o.expr);
        return {A.conjugate_square().to_text(A.coproduct(x)), "exact"};
    }
    if (o.op == "sp") {
        if (o.r_opt->count() == 0)
            throw ConfigError("--op sp needs --r");
        const HomologyModel M = base_model(c).thh();
        const Element x = parse_class(M.algebra(), o.expr);
        const Element y = M.steenrod().sp_lower(o.r, M.coaction(x), M.coaction_algebra());
        return {M.algebra().to_text(y), "exact"};
    }
    if (o.op == "epsilon") {
        const SingerConstruction S(base_model(c).thh());
        const Element x = parse_class(S.model().algebra(), o.expr);
        return {S.classes().to_text(S.epsilon(x)), "exact"};
    }
    if (o.op == "gamma") {
        const UnitPolicy units{c.random_units ? UnitPolicy::Mode::Random : UnitPolicy::Mode::One, c.seed};
        const Comparison C(base_model(c), units);
        const Element x = parse_class(C.thh().algebra(), o.expr);
        const Element y = C.gamma(x);
        std::string prov = "leading term";
        if (!y.is_zero()) {
            int f = C.page().filtration(y.terms().begin()->first);
            for (const auto& [m, coeff] : y.terms())
                f = std::max(f, C.page().filtration(m));
            prov += ", filtration " + std::to_string(f);
        }
        return {C.page().to_text(y), prov};
    }
    if (o.op == "d2") {
        const HomologyModel thh = base_model(c).thh();
        const TateAlgebra page(thh, TateKind::Page);
        const Element x = parse_class(page.algebra(), o.expr);
        return {page.to_text(d2(page, x)), "exact"};
    }
    throw ConfigError("unknown op '" + o.op + "'");
}

int cmd_eval(const Options& o, std::ostream& out) {
    const RunConfig c = run_config(o);
    c.validate();
    const EvalResult r = evaluate(o, c);
    if (o.format == "json") {
        const nlohmann::json j = {{"schema", "thhseg.eval/1"},
                                  {"op", o.op},
                                  {"class", o.expr},
                                  {"p", c.p},
                                  {"spectrum", to_string(c.spectrum.value_or(Spectrum::MU))},
                                  {"result", r.text},
                                  {"provenance", r.provenance}};
        emit(o, j.dump(2) + "\n", out);
    } else if (o.format == "text") {
        emit(o, r.text + "  [" + r.provenance + "]\n", out);
    } else {
        throw ConfigError("eval supports json and text output");
    }
    return Ok;
}

int cmd_basis(const Options& o, std::ostream& out) {
    const RunConfig c = run_config(o);
    c.validate();
    const HomologyModel M = base_model(c).thh();
    const int dmax = o.degree_max_opt->count() > 0 ? o.degree_max : 12;
    if (dmax < 0)
        throw ConfigError("degree window is empty");
    std::size_t total = 0;
    const auto bases = M.bases(dmax);
    for (const auto& b : bases)
        total += b.size();
    c.budget.check(total, "model basis");
    nlohmann::json j = {{"schema", "thhseg.basis/1"}, {"model", M.name()}, {"p", c.p}};
    nlohmann::json degrees = nlohmann::json::array();
    std::ostringstream text;
    for (int d = 0; d <= dmax; ++d) {
        std::vector<std::string> names;
        for (const auto& m : bases[static_cast<std::size_t>(d)])
            names.push_back(M.algebra().to_text(m));
        degrees.push_back({{"degree", d}, {"monomials", names}});
        text << d << ':';
        for (const auto& n : names)
            text << ' ' << n;
        text << '\n';
    }
    j["degrees"] = degrees;
    if (o.format == "json")
        emit(o, j.dump(2) + "\n", out);
    else if (o.format == "text")
        emit(o, text.str(), out);
    else
        throw ConfigError("basis supports json and text output");
    return Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations and verification suites for the Segal comparison of THH Tate constructions",
                 "thhseg"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--p", o.p, "odd prime")->capture_default_str();
    app.add_option("--spectrum", o.spectrum, "mu or bp (verify: both when omitted; otherwise mu)")
        ->check(CLI::IsMember({"mu", "bp", "thh-mu", "thh-bp"}));
    app.add_option("--ell-max", o.ell_max, "largest m_l in the MU model")->capture_default_str();
    o.k_max_opt = app.add_option("--k-max", o.k_max, "largest xibar_k (default 3 at p=3, else 2)");
    o.degree_max_opt = app.add_option("--degree-max", o.degree_max, "largest total degree");
    o.degree_min_opt = app.add_option("--degree-min", o.degree_min, "smallest total degree (chart)");
    app.add_option("--floor", o.floor, "lowest Tate filtration")->capture_default_str();
    app.add_option("--s-max", o.s_max, "highest Tate filtration (chart)")->capture_default_str();
    o.composite_span_opt = app.add_option("--composite-span", o.composite_span,
                                          "largest d-n for composite pro-inverse checks (default: all)");
    app.add_option("--seed", o.seed, "seed for randomized samples and unit choices")->capture_default_str();
    app.add_option("--threads", o.threads, "worker threads for Segal cells")->capture_default_str();
    app.add_option("--reindex-shift", o.reindex_shift)->group("");
    app.add_flag("--random-units", o.random_units, "random units in the sigma representatives");
    app.add_option("--format", o.format, "json, tsv, text or svg")
        ->check(CLI::IsMember({"json", "tsv", "text", "svg", "svg-chart"}))
        ->capture_default_str();
    app.add_option("--out", o.out, "write output to this file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite, "all, steenrod, singer, tate, kappa, gamma, segal or hochschild")
        ->capture_default_str();
    auto* chart = app.add_subcommand("chart", "dimension grid of a Tate page");
    chart->add_option("--page", o.page, "2 or 3")->capture_default_str();
    auto* tate = app.add_subcommand("tate-ss", "Tate spectral sequence pages");
    tate->require_subcommand(1);
    auto* tate_page = tate->add_subcommand("page", "classes of a page per bidegree");
    tate_page->add_option("--page", o.page, "2 or 3")->capture_default_str();
    auto* eval = app.add_subcommand("eval", "evaluate one operation on a class expression");
    eval->add_option("--op", o.op, "coproduct, sp, epsilon, gamma or d2")
        ->required()
        ->check(CLI::IsMember({"coproduct", "sp", "epsilon", "gamma", "d2"}));
    eval->add_option("--class", o.expr, "class expression, e.g. \"2*m1^2*s(m2) - t^-1*u*m1\"")->required();
    o.r_opt = eval->add_option("--r", o.r, "index of SP^r_* for --op sp");
    auto* basis = app.add_subcommand("basis", "monomial basis of the THH model per degree");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return Usage;
    }

    try {
        const bool text_default = app.get_option("--format")->count() == 0 && eval->parsed();
        if (text_default)
            o.format = "text";
        if (verify->parsed())
            return cmd_verify(o, out);
        if (chart->parsed())
            return cmd_chart(o, out);
        if (tate_page->parsed())
            return cmd_tate_page(o, out);
        if (eval->parsed())
            return cmd_eval(o, out);
        if (basis->parsed())
            return cmd_basis(o, out);
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return Resource;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return Usage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return Usage;
    } catch (const ResolutionError& e) {
        err << "unknown generator: " << e.what() << '\n';
        return Usage;
    } catch (const TruncationError& e) {
        err << "outside the configured range: " << e.what() << '\n';
        return Usage;
    } catch (const RangeError& e) {
        err << "outside the configured range: " << e.what() << '\n';
        return Usage;
    } catch (const UnsupportedCase& e) {
        err << "unsupported: " << e.what() << '\n';
        return Usage;
    } catch (const std::bad_alloc&) {
        err << "resource error: out of memory\n";
        return Resource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Failed;
    }
    return Usage;
}

} // namespace thhseg::cli
