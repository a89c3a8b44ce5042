#include "thhseg/budget.hpp"

#include "thhseg/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace thhseg {

void Budget::check(std::size_t count, const std::string& what) const {
    if (count > max_basis)
        throw ResourceError(what + " needs " + std::to_string(count) + " basis elements, budget is " +
                            std::to_string(max_basis));
}

Budget Budget::from_env() {
    Budget b;
    const char* v = std::getenv("THHSEG_MAX_BASIS");
    if (!v || !*v)
        return b;
    const auto [ptr, ec] = std::from_chars(v, v + std::strlen(v), b.max_basis);
    if (ec != std::errc{} || *ptr != '\0' || b.max_basis == 0)
        throw ConfigError(std::string("THHSEG_MAX_BASIS must be a positive integer, got '") + v + "'");
    return b;
}

} // namespace thhseg
