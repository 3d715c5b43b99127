#pragma once

#include <cstdint>
#include <limits>

namespace msw {

using Scalar = std::uint32_t;

/// The prime field GF(p), 2 <= p <= 2^16. Scalars are kept in [0, p).
class Field {
public:
    static constexpr std::uint32_t kMaxModulus = 1u << 16;

    explicit Field(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    Scalar reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }

    Scalar add(Scalar a, Scalar b) const noexcept {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// a + b*c
    Scalar fma(Scalar a, Scalar b, Scalar c) const noexcept {
        return static_cast<Scalar>((a + static_cast<std::uint64_t>(b) * c) % p_);
    }

    /// Throws Singular on zero.
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

    bool contains(std::int64_t v) const noexcept { return v >= 0 && v < static_cast<std::int64_t>(p_); }

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

/// p^e saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) noexcept;

} // namespace msw
