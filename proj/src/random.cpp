#include "msw/random.hpp"

#include <limits>

namespace msw {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Vector Rng::vector(const Field& f, std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = scalar(f);
    return v;
}

Matrix Rng::matrix(const Field& f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (auto& x : m.entries()) x = scalar(f);
    return m;
}

} // namespace msw
