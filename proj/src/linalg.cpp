#include "polycone/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace polycone {

namespace {

struct Echelon {
    RatMatrix m;                         // fraction-free row echelon form
    std::vector<std::size_t> pivot_cols; // ascending; pivot k sits at (k, pivot_cols[k])
    int swap_sign = 1;
};

// Fraction-free (Bareiss) forward elimination with the fixed pivot rule:
// columns left to right, first usable row top to bottom. Entries of pivot
// rows are signed minors of the input, so kernel solves read off Cramer
// quotients directly.
Echelon eliminate(RatMatrix a) {
    Echelon e;
    std::size_t cur = 0;
    Rational prev_pivot = 1;
    for (std::size_t c = 0; c < a.cols() && cur < a.rows(); ++c) {
        std::size_t pr = cur;
        while (pr < a.rows() && a(pr, c).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        if (pr != cur) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(cur, j), a(pr, j));
            e.swap_sign = -e.swap_sign;
        }
        const Rational pivot = a(cur, c);
        for (std::size_t i = cur + 1; i < a.rows(); ++i) {
            const Rational factor = a(i, c);
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                a(i, j) = (pivot * a(i, j) - factor * a(cur, j)) / prev_pivot;
            a(i, c) = 0;
        }
        prev_pivot = pivot;
        e.pivot_cols.push_back(c);
        ++cur;
    }
    e.m = std::move(a);
    return e;
}

} // namespace

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    if (m.rows() == 0) return 1; // empty submatrix convention
    Echelon e = eliminate(m);
    if (e.pivot_cols.size() < m.rows()) return 0;
    Rational d = e.m(m.rows() - 1, m.cols() - 1);
    return e.swap_sign < 0 ? -d : d;
}

std::size_t rank(const RatMatrix& m) { return eliminate(m).pivot_cols.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    if (m.cols() == 0) throw ContractError("kernel of a matrix with no columns");
    const Echelon e = eliminate(m);
    const std::size_t n = m.cols();
    const std::size_t r = e.pivot_cols.size();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<RatVector> basis;
    basis.reserve(n - r);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(n);
        x[f] = 1;
        for (std::size_t k = r; k-- > 0;) {
            const std::size_t p = e.pivot_cols[k];
            Rational acc;
            for (std::size_t j = p + 1; j < n; ++j) {
                if (e.m(k, j).is_zero() || x[j].is_zero()) continue;
                acc += e.m(k, j) * x[j];
            }
            x[p] = -acc / e.m(k, p);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

bool in_span(const RatVector& v, const std::vector<RatVector>& basis) {
    if (basis.empty()) return v.is_zero();
    RatMatrix stacked = RatMatrix::from_rows(basis, v.dim());
    const std::size_t base_rank = rank(stacked);
    stacked.append_row(v);
    return rank(stacked) == base_rank;
}

RatVector extend_basis(const std::vector<RatVector>& inner, const RatMatrix& outer) {
    const std::size_t n = outer.cols();
    if (n == 0) throw ContractError("extend_basis on a matrix with no columns");
    for (const RatVector& v : inner) {
        if (v.dim() != n) throw ContractError("extend_basis: inner vector dimension mismatch");
        if (!(outer * v).is_zero()) throw ContractError("extend_basis: inner vector not in kernel");
    }
    const std::size_t ker_dim = n - rank(outer);
    if (inner.size() + 1 != ker_dim)
        throw ContractError("extend_basis: inner basis must have kernel dimension minus one");
    if (!inner.empty() && rank(RatMatrix::from_rows(inner, n)) != inner.size())
        throw ContractError("extend_basis: inner vectors are not independent");

    for (RatVector& w : kernel_basis(outer))
        if (!in_span(w, inner)) return w;
    throw std::logic_error("extend_basis: kernel basis lies in the span of a smaller subspace");
}

namespace {

// Number of submatrices of all orders <= limit, saturated at cap + 1.
std::uint64_t submatrix_count(std::size_t rows, std::size_t cols, std::size_t limit,
                              std::uint64_t cap) {
    const std::uint64_t sentinel = cap + 1;
    unsigned __int128 total = 0;
    for (std::size_t k = 0; k <= limit; ++k) {
        unsigned __int128 choose_r = 1, choose_c = 1;
        for (std::size_t i = 0; i < k; ++i) {
            choose_r = choose_r * (rows - i) / (i + 1);
            choose_c = choose_c * (cols - i) / (i + 1);
            if (choose_r * choose_c > sentinel) return sentinel;
        }
        total += choose_r * choose_c;
        if (total > sentinel) return sentinel;
    }
    return static_cast<std::uint64_t>(total);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t universe) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < universe) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::set<Rational> subdeterminants(const RatMatrix& m, std::size_t size_limit, std::uint64_t cap) {
    const std::size_t max_order = std::min({size_limit, m.rows(), m.cols()});
    if (submatrix_count(m.rows(), m.cols(), max_order, cap) > cap)
        throw EnumerationLimitError("subdeterminant enumeration exceeds cap",
                                    submatrix_count(m.rows(), m.cols(), max_order, UINT64_MAX - 1),
                                    cap);
    std::set<Rational> out;
    out.insert(1); // empty submatrix
    for (std::size_t k = 1; k <= max_order; ++k) {
        std::vector<std::size_t> rsel(k), csel(k);
        for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) csel[i] = i;
            do {
                out.insert(determinant(m.submatrix(rsel, csel)));
            } while (next_combination(csel, m.cols()));
        } while (next_combination(rsel, m.rows()));
    }
    return out;
}

std::optional<bool> qsd_contains(const RatMatrix& m, const Rational& r, std::uint64_t cap) {
    std::set<Rational> sd;
    try {
        sd = subdeterminants(m, std::min(m.rows(), m.cols()), cap);
    } catch (const EnumerationLimitError&) {
        return std::nullopt;
    }
    std::set<Rational> symmetric = sd;
    for (const Rational& d : sd) symmetric.insert(-d);
    for (const Rational& q : symmetric) {
        if (q.is_zero()) continue;
        if (symmetric.count(r * q)) return true;
    }
    return false;
}

Rational hadamard_bound(const RatMatrix& m) {
    Rational bound = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational row_norm;
        for (std::size_t c = 0; c < m.cols(); ++c) row_norm += m(r, c).abs();
        if (row_norm > Rational(1)) bound *= row_norm;
    }
    return bound;
}

} // namespace polycone
