#include "thhseg/report.hpp"

#include <algorithm>

namespace thhseg {

void VerificationReport::add(std::string id, std::string anchor, bool ok, std::string counterexample) {
    checks_.push_back(Check{std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail,
                            ok ? std::string{} : std::move(counterexample)});
}

void VerificationReport::merge(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    for (const auto& [k, v] : other.dims_.items())
        dims_[k] = v;
}

void VerificationReport::set_dim(const std::string& key, nlohmann::json value) { dims_[key] = std::move(value); }

bool VerificationReport::pass() const noexcept { return failures() == 0; }

std::size_t VerificationReport::failures() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; }));
}

nlohmann::json VerificationReport::to_json() const {
    std::vector<const Check*> sorted;
    sorted.reserve(checks_.size());
    for (const auto& c : checks_)
        sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->id < b->id; });
    nlohmann::json arr = nlohmann::json::array();
    for (const Check* c : sorted) {
        nlohmann::json j = {{"id", c->id}, {"anchor", c->anchor}, {"status", c->status == Status::Pass ? "pass" : "fail"}};
        j["counterexample"] = c->counterexample.empty() ? nlohmann::json(nullptr) : nlohmann::json(c->counterexample);
        arr.push_back(std::move(j));
    }
    return {{"schema", "thhseg.report/1"}, {"checks", arr}, {"pass", pass()}, {"dims", dims_}};
}

std::vector<std::string> VerificationReport::failure_lines() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
        if (c.status == Status::Fail)
            out.push_back(c.id + ": " + c.counterexample);
    return out;
}

} // namespace thhseg
