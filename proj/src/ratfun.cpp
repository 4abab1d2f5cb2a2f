#include "fallcalc/ratfun.hpp"

#include <cmath>
#include <stdexcept>

namespace fallcalc {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

RationalFunction RationalFunction::fromPoly(Poly p) {
    RationalFunction f;
    f.num_ = std::move(p);
    f.den_ = Poly(GaussianRational(1));
    return f;
}

void RationalFunction::reduce() {
    if (num_.isZero()) {
        den_ = Poly(GaussianRational(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    GaussianRational lead = den_.leading();
    if (!(lead == GaussianRational(1))) {
        GaussianRational inv = GaussianRational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.isZero()) throw std::domain_error("division by the zero function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) {
        if (isZero()) throw std::domain_error("negative power of the zero function");
        return RationalFunction(den_, num_).pow(-n);
    }
    RationalFunction r = fromPoly(Poly(GaussianRational(1)));
    RationalFunction base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

RationalFunction RationalFunction::shifted(const GaussianRational& c) const {
    return RationalFunction(num_.shifted(c), den_.shifted(c));
}

RationalFunction RationalFunction::delta(int n) const {
    if (n < 0) throw std::invalid_argument("negative difference order");
    RationalFunction r = *this;
    for (int k = 0; k < n; ++k) r = r.shifted(GaussianRational(1)) - r;
    return r;
}

std::complex<double> RationalFunction::evalC(std::complex<double> z) const {
    return num_.evalC(z) / den_.evalC(z);
}

double RationalFunction::logAbs(std::complex<double> z) const {
    return std::log(std::abs(num_.evalC(z))) - std::log(std::abs(den_.evalC(z)));
}

std::optional<GaussianRational> RationalFunction::evalExact(const GaussianRational& z) const {
    GaussianRational d = den_.eval(z);
    if (d.isZero()) return std::nullopt;
    return num_.eval(z) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (isPolynomial()) {
        Poly p = num_.scaled(GaussianRational(1) / den_.coeff(0));
        return p.str(var);
    }
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace fallcalc
