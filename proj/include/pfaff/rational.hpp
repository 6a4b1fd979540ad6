#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "pfaff/errors.hpp"

namespace pfaff {

using BigInt = mpz_class;

/// Exact rational number. Always canonical: lowest terms, denominator > 0,
/// zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {} // NOLINT: implicit by design, coefficients read naturally
    Rational(const BigInt& v) : q_(v) {}

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Parses "num" or "num/den" (optional sign on the numerator).
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw DomainError("malformed rational '" + s + "'");
        }
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "5", "-3/7".
    std::string str() const { return q_.get_str(); }

    /// Always slashed: "5/1", "-3/7". Used by the canonical text encodings.
    std::string str_slashed() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

} // namespace pfaff
