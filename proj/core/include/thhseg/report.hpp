#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace thhseg {

enum class Status { Pass, Fail };

struct Check {
    std::string id;
    /// Short description of the identity or formula being checked.
    std::string anchor;
    Status status = Status::Pass;
    std::string counterexample;
};

class VerificationReport {
public:
    void add(std::string id, std::string anchor, bool ok, std::string counterexample = {});
    void merge(const VerificationReport& other);
    void set_dim(const std::string& key, nlohmann::json value);

    const std::vector<Check>& checks() const noexcept { return checks_; }
    const nlohmann::json& dims() const noexcept { return dims_; }
    bool pass() const noexcept;
    std::size_t failures() const noexcept;
    /// Checks sorted by id; stable for identical inputs.
    nlohmann::json to_json() const;
    std::vector<std::string> failure_lines() const;

private:
    std::vector<Check> checks_;
    nlohmann::json dims_ = nlohmann::json::object();
};

} // namespace thhseg
