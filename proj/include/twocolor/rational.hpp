#ifndef TWOCOLOR_RATIONAL_HPP
#define TWOCOLOR_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twocolor {

// Exact fraction with arbitrary-precision numerator/denominator.
// Always held in canonical form: denominator > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : value_(0) {}

    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
        if (value_.get_den() < 0) {
            value_.get_num() = -value_.get_num();
            value_.get_den() = -value_.get_den();
        }
    }

    explicit Rational(long num) : value_(num) {}

    explicit Rational(mpq_class v) : value_(std::move(v)) {
        value_.canonicalize();
    }

    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("malformed rational: " + s);
        if (slash != std::string::npos && v.get_den() == 0)
            throw std::invalid_argument("zero denominator");
        if (slash != std::string::npos &&
            s.find('-', slash) != std::string::npos)
            throw std::invalid_argument("malformed rational: " + s);
        v.canonicalize();
        return Rational(std::move(v));
    }

    std::string str() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    bool is_zero() const { return value_ == 0; }
    bool is_negative() const { return value_ < 0; }
    bool is_positive() const { return value_ > 0; }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("zero denominator");
        return Rational(mpq_class(a.value_ / b.value_));
    }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& b) {
        value_ += b.value_;
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        value_ -= b.value_;
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        value_ *= b.value_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.value_ != b.value_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return a.value_ > b.value_;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return a.value_ >= b.value_;
    }

private:
    mpq_class value_;
};

inline Rational rational(long num, long den) { return Rational(num, den); }

}  // namespace twocolor

#endif
