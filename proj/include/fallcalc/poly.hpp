#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "fallcalc/rational.hpp"

namespace fallcalc {

// Dense univariate polynomial over Q(i), coefficients stored lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(GaussianRational c0);
    explicit Poly(long c0) : Poly(GaussianRational(c0)) {}

    static Poly variable();  // z
    static Poly fromCoeffs(std::vector<GaussianRational> lowFirst);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    GaussianRational coeff(int k) const;
    GaussianRational leading() const;
    GaussianRational constantTerm() const { return coeff(0); }

    // Lowest index with a nonzero coefficient; -1 for the zero polynomial.
    int valuationAtZero() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const GaussianRational& s) const;
    Poly pow(int n) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    GaussianRational eval(const GaussianRational& z) const;
    std::complex<double> evalC(std::complex<double> z) const;

    Poly derivative() const;
    Poly shifted(const GaussianRational& c) const;  // p(z + c)
    Poly delta(int n = 1) const;                    // forward difference, n-fold
    Poly fallExpr(int n) const;                     // p(z) p(z-1) ... p(z-n+1)
    Poly monic() const;

    // z(z-1)...(z-n+1); the shifted variant has zeros start, start+1, ..., start+n-1.
    static Poly fallingPower(int n);
    static Poly fallingPower(const GaussianRational& start, int n);

    // Coefficients of p in the falling-power basis, lowest first:
    // p = sum_k newton[k] * z^(k falling).
    std::vector<GaussianRational> toNewton() const;
    static Poly fromNewton(const std::vector<GaussianRational>& newton);

    std::string str(const std::string& var = "z") const;

private:
    std::vector<GaussianRational> c_;
    void normalize();
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

bool divides(const Poly& d, const Poly& a);

// Multiplicity of `at` as a root of p (0 if not a root). p must be nonzero.
int rootMultiplicity(const Poly& p, const GaussianRational& at);

}  // namespace fallcalc
