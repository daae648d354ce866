#include "polycone/matrix.hpp"

#include <ostream>
#include <sstream>

namespace polycone {

RatVector RatVector::unit(std::size_t dim, std::size_t axis) {
    if (axis >= dim) throw DimensionError("unit vector axis out of range");
    RatVector v(dim);
    v[axis] = 1;
    return v;
}

bool RatVector::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RatVector RatVector::operator-() const {
    RatVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = -entries_[i];
    return r;
}

RatVector& RatVector::operator+=(const RatVector& o) {
    if (dim() != o.dim()) throw DimensionError("vector addition dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o[i];
    return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
    if (dim() != o.dim()) throw DimensionError("vector subtraction dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o[i];
    return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Rational RatVector::dot(const RatVector& o) const {
    if (dim() != o.dim()) throw DimensionError("dot product dimension mismatch");
    Rational acc;
    for (std::size_t i = 0; i < dim(); ++i) acc += entries_[i] * o[i];
    return acc;
}

RatVector RatVector::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    for (const auto& e : entries_) {
        mpz_class d = e.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> scaled;
    scaled.reserve(dim());
    mpz_class num_gcd = 0;
    for (const auto& e : entries_) {
        mpz_class v = e.numerator() * (den_lcm / e.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
        scaled.push_back(std::move(v));
    }
    RatVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = Rational(mpz_class(scaled[i] / num_gcd));
    return out;
}

std::strong_ordering operator<=>(const RatVector& a, const RatVector& b) {
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string RatVector::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) os << ' ';
        os << entries_[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) { return os << v.str(); }

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(0) {
    for (const auto& r : rows) {
        if (cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != cols) throw DimensionError("row width mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t r) const {
    if (r >= rows_) throw DimensionError("row index out of range");
    RatVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

void RatMatrix::append_row(const RatVector& v) {
    if (v.dim() != cols_) throw DimensionError("appended row width mismatch");
    entries_.insert(entries_.end(), v.entries().begin(), v.entries().end());
    ++rows_;
}

RatMatrix RatMatrix::without_row(std::size_t r) const {
    if (r >= rows_) throw DimensionError("row index out of range");
    RatMatrix m(rows_ - 1, cols_);
    for (std::size_t i = 0, o = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t c = 0; c < cols_; ++c) m(o, c) = (*this)(i, c);
        ++o;
    }
    return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& top, const RatMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("vstack column mismatch");
    RatMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
    return m;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    RatMatrix m(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c) m(r, c) = (*this)(row_idx[r], col_idx[c]);
    return m;
}

RatVector RatMatrix::row_sum() const {
    RatVector v(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) v[c] += (*this)(r, c);
    return v;
}

RatVector RatMatrix::operator*(const RatVector& x) const {
    if (x.dim() != cols_) throw DimensionError("matrix-vector dimension mismatch");
    RatVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << '\n';
        os << row(r).str();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.str(); }

} // namespace polycone
