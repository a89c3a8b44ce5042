#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace thhseg {

using GenId = std::uint32_t;

enum class Parity : std::uint8_t { Even, Odd };

struct Generator {
    std::string name;
    int degree = 0;
    Parity parity = Parity::Even;
    /// Laurent generators may carry negative exponents (at most one per table).
    bool laurent = false;

    bool odd() const noexcept { return parity == Parity::Odd; }
};

/// Named graded generators. Parity must agree with the parity of the degree,
/// odd generators are exterior, and names are unique.
class GeneratorTable {
public:
    GeneratorTable() = default;

    /// Throws ContractViolation on a duplicate name, a parity/degree mismatch,
    /// or a second Laurent generator.
    GenId add(std::string name, int degree, Parity parity, bool laurent = false);
    /// Parity taken from the degree.
    GenId add(std::string name, int degree) {
        return add(std::move(name), degree, degree % 2 == 0 ? Parity::Even : Parity::Odd);
    }
    void add_alias(std::string alias, GenId id);

    std::size_t size() const noexcept { return gens_.size(); }
    std::span<const Generator> generators() const noexcept { return gens_; }
    const Generator& operator[](GenId id) const { return gens_[id]; }
    /// Throws ResolutionError on an out-of-range id.
    const Generator& at(GenId id) const;

    std::optional<GenId> find(std::string_view name) const;
    /// Throws ResolutionError on an unknown name.
    GenId resolve(std::string_view name) const;
    std::optional<GenId> laurent() const noexcept { return laurent_; }

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, GenId> index_;
    std::optional<GenId> laurent_;
};

} // namespace thhseg
