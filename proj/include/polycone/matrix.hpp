#ifndef POLYCONE_MATRIX_HPP
#define POLYCONE_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "polycone/errors.hpp"
#include "polycone/rational.hpp"

namespace polycone {

/// Dense vector of exact rationals.
class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t dim) : entries_(dim) {}
    RatVector(std::initializer_list<Rational> init) : entries_(init) {}
    explicit RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    static RatVector unit(std::size_t dim, std::size_t axis);

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    bool is_zero() const;

    RatVector operator-() const;
    RatVector& operator+=(const RatVector& o);
    RatVector& operator-=(const RatVector& o);
    RatVector& operator*=(const Rational& s);

    friend RatVector operator+(RatVector a, const RatVector& b) { a += b; return a; }
    friend RatVector operator-(RatVector a, const RatVector& b) { a -= b; return a; }
    friend RatVector operator*(const Rational& s, RatVector v) { v *= s; return v; }

    Rational dot(const RatVector& o) const;

    /// Positive rescaling to the integer vector with coprime entries.
    /// The direction and orientation of the vector are unchanged.
    RatVector primitive() const;

    friend bool operator==(const RatVector& a, const RatVector& b) { return a.entries_ == b.entries_; }
    friend std::strong_ordering operator<=>(const RatVector& a, const RatVector& b);

    std::string str() const;

    const std::vector<Rational>& entries() const { return entries_; }

private:
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RatVector& v);

/// Dense row-major matrix of exact rationals. A matrix with zero rows and a
/// positive number of columns is legal and represents an empty system.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero_rows(std::size_t cols) { return RatMatrix(0, cols); }
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    void append_row(const RatVector& v);
    RatMatrix without_row(std::size_t r) const;

    /// Vertical concatenation; both operands must agree on the column count.
    static RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);

    /// Submatrix taken at the given row and column index sets (ascending order
    /// expected; indices are not checked for duplicates).
    RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;

    /// Sum of all rows (the zero vector for a matrix with no rows).
    RatVector row_sum() const;

    RatVector operator*(const RatVector& x) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

} // namespace polycone

#endif
