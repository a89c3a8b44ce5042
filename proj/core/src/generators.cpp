#include "thhseg/generators.hpp"

#include "thhseg/errors.hpp"

namespace thhseg {

GenId GeneratorTable::add(std::string name, int degree, Parity parity, bool laurent) {
    if (name.empty())
        throw ContractViolation("generator name must not be empty");
    if (index_.contains(name))
        throw ContractViolation("duplicate generator name '" + name + "'");
    const bool odd_degree = (degree % 2) != 0;
    if (odd_degree != (parity == Parity::Odd))
        throw ContractViolation("generator '" + name + "' has degree " + std::to_string(degree) +
                                " but the opposite parity");
    if (laurent) {
        if (laurent_)
            throw ContractViolation("table already has a Laurent generator");
        if (parity == Parity::Odd)
            throw ContractViolation("a Laurent generator must be even");
    }
    const auto id = static_cast<GenId>(gens_.size());
    index_.emplace(name, id);
    gens_.push_back(Generator{std::move(name), degree, parity, laurent});
    if (laurent)
        laurent_ = id;
    return id;
}

void GeneratorTable::add_alias(std::string alias, GenId id) {
    at(id);
    if (index_.contains(alias))
        throw ContractViolation("duplicate generator name '" + alias + "'");
    index_.emplace(std::move(alias), id);
}

const Generator& GeneratorTable::at(GenId id) const {
    if (id >= gens_.size())
        throw ResolutionError("generator id " + std::to_string(id) + " is not in the table");
    return gens_[id];
}

std::optional<GenId> GeneratorTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

GenId GeneratorTable::resolve(std::string_view name) const {
    if (auto id = find(name))
        return *id;
    throw ResolutionError("unknown generator '" + std::string(name) + "'");
}

} // namespace thhseg
