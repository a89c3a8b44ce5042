#include "thhseg/field.hpp"

#include "thhseg/errors.hpp"

#include <string>

namespace thhseg {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p == 2)
        throw ConfigError("p = 2 is not supported: only odd primes are implemented");
    if (!is_prime(p))
        throw ConfigError("p = " + std::to_string(p) + " is not prime");
    if (p > 65521)
        throw ConfigError("p = " + std::to_string(p) + " is too large");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
    Coeff result = 1;
    Coeff base = a % p_;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Coeff PrimeField::inv(Coeff a) const {
    if (a % p_ == 0)
        throw ContractViolation("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

} // namespace thhseg
