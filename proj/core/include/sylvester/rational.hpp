#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace sylvester {

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero stored as 0/1. All operations are exact.
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    BigRational(int n) : value_(n) {}   // NOLINT(google-explicit-constructor)
    BigRational(long num, long den);
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(const mpz_class& n) : value_(n) {}

    /// Parses "p/q" or "p" with an optional leading sign on p.
    static BigRational parse(const std::string& text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_negative() const { return sgn(value_) < 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);  // rejects division by zero

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.value_ != b.value_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.value_ >= b.value_; }

    /// "p/q" with the sign on p, or just "p" when q = 1.
    std::string str() const { return value_.get_str(); }

    double to_double() const { return value_.get_d(); }

private:
    mpq_class value_;  // kept canonical
};

/// a^e for integer e; negative e requires a != 0.
BigRational pow(const BigRational& a, long exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(long n) : re_(n) {}                      // NOLINT
    GaussianRational(int n) : re_(n) {}                       // NOLINT
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Parses "re", "re+im i" or "im i" ("1", "-1/2", "2-3i", "i", "-i").
    static GaussianRational parse(const std::string& text);

    const BigRational& real() const { return re_; }
    const BigRational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conjugate() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);  // rejects division by zero

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// "a", "bi", or "a+bi" / "a-bi".
    std::string str() const;

private:
    BigRational re_;
    BigRational im_;
};

GaussianRational pow(const GaussianRational& a, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace sylvester
