#ifndef POLYCONE_RATIONAL_HPP
#define POLYCONE_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "polycone/errors.hpp"

namespace polycone {

/// Exact arbitrary-precision rational scalar.
///
/// Invariants: numerator and denominator are coprime, the denominator is
/// positive, and zero is stored as 0/1. Every constructor canonicalizes, and
/// all arithmetic preserves the canonical form.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}                  // NOLINT: implicit by design
    Rational(long n) : value_(n) {}                 // NOLINT
    Rational(const mpz_class& n) : value_(n) {}     // NOLINT
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    Rational(long num, long den) : value_(num, den) {
        if (den == 0) throw InputError("rational with zero denominator");
        value_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
        if (den == 0) throw InputError("rational with zero denominator");
        value_.canonicalize();
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational reciprocal() const {
        if (is_zero()) throw InputError("reciprocal of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
        return Rational(r);
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InputError("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Lowest-terms text form: "p" for integers, "p/q" otherwise.
    std::string str() const { return value_.get_str(); }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace polycone

#endif
