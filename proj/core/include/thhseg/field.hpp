#pragma once

#include <cstdint>

namespace thhseg {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for an odd prime p chosen at run time.
/// Coefficients are stored as integers in [0, p).
class PrimeField {
public:
    /// Throws ConfigError unless p is an odd prime (p = 2 is not supported).
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    Coeff add(Coeff a, Coeff b) const noexcept {
        Coeff s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept;
    /// Throws ContractViolation on zero.
    Coeff inv(Coeff a) const;

    Coeff from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    /// (-1)^e as a field element.
    Coeff sign(std::int64_t e) const noexcept { return (e % 2 == 0) ? 1 : p_ - 1; }
    /// Representative in (-p/2, p/2], used for printing.
    std::int64_t symmetric(Coeff a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

} // namespace thhseg
