#ifndef POLYCONE_TESTS_SUPPORT_HPP
#define POLYCONE_TESTS_SUPPORT_HPP

#include <random>

#include "polycone/cone.hpp"

namespace polycone::testing {

/// Deterministic generator of small random instances.
class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    RatMatrix matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
        RatMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
        return m;
    }

    /// Random cone with 1 <= n <= max_dim, 1 <= p + q <= max_rows and integer
    /// entries in [lo, hi]. The inequality/equation split is uniform.
    HCone cone(std::size_t max_dim, std::size_t max_rows, long lo, long hi) {
        const auto n = static_cast<std::size_t>(uniform(1, static_cast<long>(max_dim)));
        const auto total = static_cast<std::size_t>(uniform(1, static_cast<long>(max_rows)));
        const auto p = static_cast<std::size_t>(uniform(0, static_cast<long>(total)));
        return HCone(matrix(p, n, lo, hi), matrix(total - p, n, lo, hi));
    }

    /// Point of the cone: random nonnegative combination of the generators
    /// (small integer and half-integer coefficients).
    RatVector cone_point(const GeneratorSet& gens) {
        RatVector x(gens.dim());
        for (const RatVector& g : gens.vectors()) x += Rational(uniform(0, 6), 2) * g;
        return x;
    }

private:
    std::mt19937_64 rng_;
};

/// Test-only determinant oracle: cofactor expansion along the first row.
inline Rational det_cofactor(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("cofactor oracle needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational acc;
    std::vector<std::size_t> rows;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (j != c) cols.push_back(j);
        const Rational minor = det_cofactor(m.submatrix(rows, cols));
        acc += (c % 2 == 0 ? m(0, c) : -m(0, c)) * minor;
    }
    return acc;
}

inline RatVector vec(std::initializer_list<Rational> init) { return RatVector(init); }

} // namespace polycone::testing

#endif
