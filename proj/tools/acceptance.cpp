#include <thhseg/errors.hpp>
#include <thhseg/suites.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace thhseg;

namespace {

struct Run {
    VerificationReport report;
    std::string json;
};

Run run(const std::string& suite, const RunConfig& c) {
    Run r{run_suite(suite, c), {}};
    r.json = r.report.to_json().dump();
    return r;
}

struct Outcome {
    bool ok = true;
    std::size_t checks = 0;
    std::string note;

    void absorb(const Run& r) {
        checks += r.report.checks().size();
        if (!r.report.pass()) {
            ok = false;
            const auto lines = r.report.failure_lines();
            note = lines.empty() ? "failed" : lines.front();
        }
    }
};

RunConfig config(std::uint32_t p, std::optional<Spectrum> s = {}, std::optional<int> k_max = {}) {
    RunConfig c;
    c.p = p;
    c.spectrum = s;
    c.k_max = k_max;
    return c;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        double bound_seconds;
        std::function<Outcome()> body;
    };

    const std::vector<Criterion> criteria = {
        {1, "steenrod", 10,
         [] {
             Outcome o;
             o.absorb(run("steenrod", config(3)));
             o.absorb(run("steenrod", config(5)));
             return o;
         }},
        {2, "epsilon", 5,
         [] {
             Outcome o;
             o.absorb(run("singer", config(3)));
             return o;
         }},
        {3, "tate-ss", 120,
         [] {
             Outcome o;
             o.absorb(run("tate", config(3, Spectrum::MU)));
             o.absorb(run("tate", config(3, Spectrum::BP, 2)));
             return o;
         }},
        {4, "gamma", 30,
         [] {
             Outcome o;
             o.absorb(run("gamma", config(3)));
             return o;
         }},
        {5, "kappa-omega", 5,
         [] {
             Outcome o;
             o.absorb(run("kappa", config(3)));
             return o;
         }},
        {6, "segal", 300,
         [] {
             Outcome o;
             o.absorb(run("segal", config(3, Spectrum::MU)));
             o.absorb(run("segal", config(3, Spectrum::BP, 2)));
             return o;
         }},
        {7, "hochschild", 60,
         [] {
             Outcome o;
             o.absorb(run("hochschild", config(3)));
             return o;
         }},
        {8, "determinism", 600,
         [] {
             Outcome o;
             const std::vector<std::pair<std::string, RunConfig>> runs = {
                 {"steenrod", config(3)},
                 {"steenrod", config(5)},
                 {"singer", config(3)},
                 {"tate", config(3, Spectrum::MU)},
                 {"tate", config(3, Spectrum::BP, 2)},
                 {"gamma", config(3)},
                 {"kappa", config(3)},
                 {"segal", config(3, Spectrum::MU)},
                 {"segal", config(3, Spectrum::BP, 2)},
                 {"hochschild", config(3)},
             };
             for (const auto& [suite, c] : runs) {
                 RunConfig threaded = c;
                 threaded.threads = 3;
                 const Run a = run(suite, c);
                 const Run b = run(suite, threaded);
                 ++o.checks;
                 if (a.json != b.json) {
                     o.ok = false;
                     o.note = suite + " reports differ between runs";
                 }
             }
             RunConfig randomized = config(3, Spectrum::MU);
             randomized.random_units = true;
             randomized.seed = 17;
             randomized.composite_span = 8;
             ++o.checks;
             if (run("segal", randomized).json != run("segal", randomized).json) {
                 o.ok = false;
                 o.note = "seeded segal reports differ between runs";
             }
             return o;
         }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.bound_seconds;
        if (!in_time && o.note.empty())
            o.note = "over the time bound";
        const bool ok = o.ok && in_time;
        all = all && ok;
        std::printf("criterion %d %-12s %s  %zu checks  %.2f s (bound %.0f s)%s%s\n", c.number, c.name.c_str(),
                    ok ? "PASS" : "FAIL", o.checks, secs, c.bound_seconds, o.note.empty() ? "" : "  ",
                    o.note.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
