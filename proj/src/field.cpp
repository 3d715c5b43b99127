#include "msw/field.hpp"

#include "msw/error.hpp"

#include <string>

namespace msw {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p) : p_(p) {
    if (p > kMaxModulus || !is_prime(p))
        throw InvalidField("modulus " + std::to_string(p) + " is not a prime in [2, 2^16]");
}

Scalar Field::inv(Scalar a) const {
    if (a % p_ == 0) throw Singular("division by zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (a, p)
    std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return reduce(t0);
}

std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (p != 0 && r > kMax / p) return kMax;
        r *= p;
    }
    return r;
}

} // namespace msw
