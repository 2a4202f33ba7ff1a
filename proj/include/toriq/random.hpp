#pragma once

// Seeded random data for tests and sampling checks. mt19937_64 output is
// specified by the standard, so streams are reproducible across platforms;
// std::uniform_int_distribution is not, which is why we reduce by hand.

#include <cstdint>
#include <random>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace toriq {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform-ish in [lo, hi]; modulo bias is irrelevant for test data
    long next_int(long lo, long hi) {
        assert(lo <= hi);
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

    bool next_bool() { return (eng_() & 1) != 0; }

    Rational next_rational(long max_abs_num = 5, long max_den = 4) {
        long num = next_int(-max_abs_num, max_abs_num);
        long den = next_int(1, max_den);
        return Rational(Integer(num), Integer(den));
    }

    RatMatrix next_matrix(std::size_t rows, std::size_t cols, long max_abs_num = 5,
                          long max_den = 4) {
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = next_rational(max_abs_num, max_den);
        return m;
    }

    RatMatrix next_invertible(std::size_t n, long max_abs_num = 3, long max_den = 2);

    std::vector<std::size_t> shuffled_indices(std::size_t n) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(eng_() % i);
            std::swap(idx[i - 1], idx[j]);
        }
        return idx;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace toriq

#include "linalg.hpp"

namespace toriq {

inline RatMatrix Rng::next_invertible(std::size_t n, long max_abs_num, long max_den) {
    for (;;) {
        RatMatrix m = next_matrix(n, n, max_abs_num, max_den);
        if (det(m) != Rational(0)) return m;
    }
}

}  // namespace toriq
