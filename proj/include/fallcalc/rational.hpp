#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace fallcalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string ratToString(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "p/q", and plain decimal strings; every form maps to an exact rational.
Rat ratFromString(const std::string& s);

// Exact: doubles are binary rationals.
inline Rat ratFromDouble(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value cannot become a rational");
    return Rat(x);
}

// Element of Q(i). Comparisons are exact; ordering is lexicographic (re, im)
// and exists only to make containers deterministic.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() = default;
    GaussianRational(Rat r) : re(std::move(r)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(int r) : re(r) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational iUnit() { return GaussianRational(Rat(0), Rat(1)); }

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }
    bool isGaussianInteger() const {
        return denominator(re) == 1 && denominator(im) == 1;
    }

    GaussianRational conj() const { return {re, -im}; }
    Rat normSq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rat n = o.normSq();
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
    bool operator<(const GaussianRational& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    std::complex<double> toComplex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    // "0", "1/2", "i", "-3/2+i", "1-2i"
    std::string str() const;
};

inline GaussianRational gaussianFromComplex(std::complex<double> z) {
    return {ratFromDouble(z.real()), ratFromDouble(z.imag())};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

}  // namespace fallcalc
