#include "sylvester/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace sylvester {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != ' ' && c != '\t') out.push_back(c);
    }
    return out;
}

}  // namespace

BigRational::BigRational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
    std::string s = strip_spaces(text);
    if (!s.empty() && s.front() == '+') s.erase(s.begin());  // GMP rejects a leading '+'
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            BigRational r;
            r.value_ = mpq_class(mpz_class(s));
            return r;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        return BigRational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    }
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.value_ = -value_;
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

BigRational pow(const BigRational& a, long exponent) {
    if (exponent == 0) return BigRational(1);
    if (a.is_zero()) {
        if (exponent < 0) throw std::domain_error("zero cannot be raised to a negative power");
        return BigRational(0);
    }
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                         : static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), e);
    return exponent < 0 ? BigRational(den, num) : BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

GaussianRational GaussianRational::parse(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return GaussianRational(BigRational::parse(s));
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that separates the real and imaginary parts
    // (position 0 is a sign of the first term, a sign after '/' never occurs
    // in canonical input).
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
            split = i;
            break;
        }
    }
    auto parse_imag = [](const std::string& part) {
        if (part.empty() || part == "+") return BigRational(1);
        if (part == "-") return BigRational(-1);
        return BigRational::parse(part);
    };
    if (split == std::string::npos) return {BigRational(0), parse_imag(body)};
    return {BigRational::parse(body.substr(0, split)), parse_imag(body.substr(split))};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    BigRational re = re_ * o.re_ - im_ * o.im_;
    BigRational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    const BigRational norm = o.re_ * o.re_ + o.im_ * o.im_;
    BigRational re = (re_ * o.re_ + im_ * o.im_) / norm;
    BigRational im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    return im_.is_negative() ? re_.str() + imag : re_.str() + "+" + imag;
}

GaussianRational pow(const GaussianRational& a, unsigned long exponent) {
    GaussianRational result(1);
    GaussianRational base = a;
    unsigned long e = exponent;
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace sylvester
