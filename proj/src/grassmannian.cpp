#include "msw/grassmannian.hpp"

#include "msw/error.hpp"

#include <limits>
#include <numeric>

namespace msw {

namespace {

constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

// Lexicographic successor of a d-subset of [0, n); false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t d = c.size();
    std::size_t i = d;
    while (i > 0) {
        --i;
        if (c[i] < n - d + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t d) {
    std::vector<std::size_t> c(d);
    std::iota(c.begin(), c.end(), std::size_t{0});
    return c;
}

} // namespace

std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q) {
    if (d > n) return 0;
    // prod_{i<d} (q^(n-i) - 1) / (q^(i+1) - 1), evaluated with 128-bit intermediates
    __extension__ using Wide = unsigned __int128;
    Wide num = 1;
    for (std::size_t i = 0; i < d; ++i) {
        const std::uint64_t top = saturating_pow(q, n - i);
        const std::uint64_t bot = saturating_pow(q, i + 1);
        if (top == kSaturated || bot == kSaturated) return kSaturated;
        num *= (top - 1);
        num /= (bot - 1);  // exact: partial products are themselves Gaussian binomials
        if (num > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(num);
}

std::size_t Grassmannian::free_count(const std::vector<std::size_t>& pivots, std::size_t n) {
    std::size_t total = 0;
    const std::size_t d = pivots.size();
    for (std::size_t r = 0; r < d; ++r) total += (n - 1 - pivots[r]) - (d - 1 - r);
    return total;
}

Grassmannian::Grassmannian(Field field, std::size_t n, std::size_t d) : field_(field), n_(n), d_(d), size_(0) {
    if (d > n) throw ShapeMismatch("Grassmannian dimension exceeds ambient dimension");
    auto c = first_combination(d);
    do {
        size_ = saturating_add(size_, saturating_pow(field.p(), free_count(c, n)));
    } while (next_combination(c, n));
}

Grassmannian::Cursor::Cursor(const Grassmannian& g, std::uint64_t start)
    : field_(g.field_), n_(g.n_), d_(g.d_), pivots_(first_combination(g.d_)), basis_(g.field_, g.d_, g.n_), index_(start) {
    if (start >= g.size_) {
        done_ = true;
        return;
    }
    // Skip whole pivot patterns, then place the remainder into the odometer.
    std::uint64_t rest = start;
    while (true) {
        const auto block = saturating_pow(g.field_.p(), free_count(pivots_, g.n_));
        if (rest < block) break;
        rest -= block;
        next_combination(pivots_, g.n_);
    }
    load_pattern();
    for (std::size_t k = 0; k < digits_.size(); ++k) {
        digits_[k] = static_cast<Scalar>(rest % g.field_.p());
        rest /= g.field_.p();
        basis_(free_[k].first, free_[k].second) = digits_[k];
    }
}

void Grassmannian::Cursor::load_pattern() {
    const std::size_t d = d_, n = n_;
    free_.clear();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots_) is_pivot[c] = true;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = pivots_[r] + 1; c < n; ++c)
            if (!is_pivot[c]) free_.emplace_back(r, c);
    digits_.assign(free_.size(), 0);
    std::fill(basis_.entries().begin(), basis_.entries().end(), 0);
    for (std::size_t r = 0; r < d; ++r) basis_(r, pivots_[r]) = 1;
}

bool Grassmannian::Cursor::next_pattern() {
    if (!next_combination(pivots_, n_)) return false;
    load_pattern();
    return true;
}

void Grassmannian::Cursor::advance() {
    if (done_) return;
    ++index_;
    const Scalar p = field_.p();
    for (std::size_t k = 0; k < digits_.size(); ++k) {
        auto& [r, c] = free_[k];
        if (++digits_[k] < p) {
            basis_(r, c) = digits_[k];
            return;
        }
        digits_[k] = 0;
        basis_(r, c) = 0;
    }
    if (!next_pattern()) done_ = true;
}

VectorSubspace Grassmannian::at(std::uint64_t index) const {
    auto c = cursor(index);
    if (c.done()) throw ShapeMismatch("Grassmannian index out of range");
    return c.subspace();
}

} // namespace msw
