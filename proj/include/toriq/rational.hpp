#pragma once

// Exact rational scalar. Thin wrapper over GMP's mpq_class that keeps every
// value canonical (lowest terms, positive denominator) and speaks "p/q".

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

#include "error.hpp"

namespace toriq {

using Integer = mpz_class;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division: largest q with q*b <= a. b != 0.
inline Integer int_fdiv(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}        // NOLINT(google-explicit-constructor)
    Rational(long n) : q_((signed long)n) {}  // NOLINT
    Rational(const Integer& n) : q_(n) {}     // NOLINT
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (den == 0) throw math_error("DivisionByZero", "rational with zero denominator");
        q_.canonicalize();
    }

    // Strict "p" or "p/q" with optional leading sign on p, q > 0.
    static Rational parse(const std::string& s) {
        auto fail = [&] { throw input_error("invalid rational literal: '" + s + "'"); };
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        std::size_t num_begin = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == num_begin) fail();
        Integer num(s.substr(num_begin, i - num_begin));
        if (neg) num = -num;
        if (i == s.size()) return Rational(num);
        if (s[i] != '/') fail();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == den_begin || i != s.size()) fail();
        Integer den(s.substr(den_begin));
        if (den == 0) fail();
        return Rational(num, den);
    }

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Integer floor() const { return int_fdiv(num(), den()); }
    Integer ceil() const {
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return r;
    }

    std::string str() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return raw(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return raw(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return raw(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw math_error("DivisionByZero", "rational division by zero");
        return raw(a.q_ / b.q_);
    }
    Rational operator-() const { return raw(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}
    // mpq_class arithmetic preserves canonical form, so skip re-canonicalizing.
    static Rational raw(mpq_class q) { return Rational(std::move(q), raw_tag{}); }

    mpq_class q_;
};

}  // namespace toriq
