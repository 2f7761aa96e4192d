#ifndef LAXKIT_RANDOM_HPP
#define LAXKIT_RANDOM_HPP

#include <laxkit/matrix.hpp>

#include <random>

namespace laxkit {

/// Deterministic generator of small exact scalars for property sweeps:
/// numerators in [-3, 3], denominators in {1, 2}.
class RationalRng {
public:
    explicit RationalRng(std::uint64_t seed) : eng_(seed), num_(-3, 3), den_(1, 2) {}

    Scalar next() { return Scalar(Rat(num_(eng_), den_(eng_))); }

    Scalar next_nonzero() {
        for (;;) {
            Scalar s = next();
            if (!s.is_zero()) return s;
        }
    }

    Mat next_mat(std::size_t rows, std::size_t cols) {
        Mat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = next();
        return m;
    }

    Mat next_skew(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                m(i, j) = next();
                m(j, i) = -m(i, j);
            }
        return m;
    }

private:
    std::mt19937_64 eng_;
    std::uniform_int_distribution<long> num_;
    std::uniform_int_distribution<long> den_;
};

} // namespace laxkit

#endif
