#pragma once

// Gaussian rationals a + b*i, the scalar field of complexified symplectic spaces.

#include <string>

#include "rational.hpp"

namespace toriq {

class Gaussian {
  public:
    Rational re, im;

    Gaussian() = default;
    Gaussian(int n) : re(n) {}                   // NOLINT(google-explicit-constructor)
    Gaussian(Rational r) : re(std::move(r)) {}   // NOLINT
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Gaussian conj() const { return Gaussian(re, -im); }
    // a * conj(a), always real and nonnegative.
    Rational norm2() const { return re * re + im * im; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re + b.re, a.im + b.im);
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re - b.re, a.im - b.im);
    }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        if (b.is_zero()) throw math_error("DivisionByZero", "gaussian division by zero");
        Rational n = b.norm2();
        Gaussian p = a * b.conj();
        return Gaussian(p.re / n, p.im / n);
    }
    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian& operator+=(const Gaussian& o) { *this = *this + o; return *this; }
    Gaussian& operator-=(const Gaussian& o) { *this = *this - o; return *this; }
    Gaussian& operator*=(const Gaussian& o) { *this = *this * o; return *this; }
    Gaussian& operator/=(const Gaussian& o) { *this = *this / o; return *this; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string imag = (im == Rational(1))    ? "i"
                           : (im == Rational(-1)) ? "-i"
                                                  : im.str() + "*i";
        if (re.is_zero()) return imag;
        if (imag[0] == '-') return re.str() + " - " + imag.substr(1);
        return re.str() + " + " + imag;
    }

    friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }
};

}  // namespace toriq
