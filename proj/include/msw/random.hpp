#pragma once

#include "msw/matrix.hpp"

#include <cstdint>
#include <random>

namespace msw {

/// Seeded generator with platform-independent draws (no std distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);
    Scalar scalar(const Field& f) { return static_cast<Scalar>(below(f.p())); }
    Scalar nonzero_scalar(const Field& f) { return static_cast<Scalar>(1 + below(f.p() - 1)); }
    Vector vector(const Field& f, std::size_t n);
    Matrix matrix(const Field& f, std::size_t rows, std::size_t cols);

private:
    std::mt19937_64 engine_;
};

} // namespace msw
