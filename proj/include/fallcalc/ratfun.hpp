#pragma once

#include <complex>
#include <optional>
#include <string>

#include "fallcalc/poly.hpp"

namespace fallcalc {

// Quotient of coprime polynomials with monic denominator; the zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(GaussianRational(1)) {}
    RationalFunction(Poly num, Poly den);

    static RationalFunction fromPoly(Poly p);
    static RationalFunction variable() { return fromPoly(Poly::variable()); }
    static RationalFunction constant(GaussianRational c) { return fromPoly(Poly(std::move(c))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isPolynomial() const { return den_.degree() == 0; }
    bool isConstant() const { return num_.isConstant() && den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction pow(int n) const;  // negative n inverts

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction shifted(const GaussianRational& c) const;
    RationalFunction delta(int n = 1) const;

    std::complex<double> evalC(std::complex<double> z) const;
    double logAbs(std::complex<double> z) const;  // log |f(z)|, +/-inf at poles and zeros
    std::optional<GaussianRational> evalExact(const GaussianRational& z) const;

    // max(deg num, deg den): the large-radius slope of the characteristic.
    int degreeMax() const { return std::max(num_.degree(), den_.degree()); }

    std::string str(const std::string& var = "z") const;

private:
    Poly num_, den_;
    void reduce();
};

}  // namespace fallcalc
