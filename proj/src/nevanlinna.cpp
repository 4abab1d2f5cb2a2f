#include "fallcalc/nevanlinna.hpp"

#include <cmath>
#include <stdexcept>

namespace fallcalc {

double circleMean(const std::function<double(double)>& g, const Quadrature& q) {
    if (q.nodes < 8) throw std::invalid_argument("too few quadrature nodes");
    double spacing = 2.0 * M_PI / q.nodes;
    for (int attempt = 0; attempt < 2; ++attempt) {
        double offset = attempt == 0 ? 0.0 : 0.5 * spacing * q.nudgeFraction;
        double sum = 0.0;
        bool ok = true;
        for (int j = 0; j < q.nodes; ++j) {
            double v = g(spacing * j + offset);
            if (!std::isfinite(v)) {
                ok = false;
                break;
            }
            sum += v;
        }
        if (ok) return sum / q.nodes;
    }
    throw std::domain_error("integrand stayed singular after node nudge");
}

double logAbsSinPi(std::complex<double> z) {
    double u = M_PI * z.real();
    double v = M_PI * z.imag();
    double av = std::fabs(v);
    // |sin(u+iv)|^2 = sin^2 u + sinh^2 v, factored so the exponential never overflows
    double e = std::exp(-2.0 * av);
    double s = std::sin(u);
    double body = 0.25 * (1.0 - e) * (1.0 - e) + e * s * s;
    if (body == 0.0) return -std::numeric_limits<double>::infinity();
    return av + 0.5 * std::log(body);
}

TupleEntry TupleEntry::fromPoly(const Poly& p) {
    if (p.isZero()) throw std::domain_error("tuple entry must not vanish identically");
    TupleEntry e;
    e.logAbs = [p](std::complex<double> z) { return std::log(std::abs(p.evalC(z))); };
    int v = p.valuationAtZero();
    e.logAbsLowest = std::log(std::abs(p.coeff(v).toComplex()));
    return e;
}

TupleEntry TupleEntry::fromRatFun(const RationalFunction& f) {
    if (f.isZero()) throw std::domain_error("tuple entry must not vanish identically");
    TupleEntry e;
    RationalFunction g = f;
    e.logAbs = [g](std::complex<double> z) { return g.logAbs(z); };
    int vn = f.num().valuationAtZero();
    int vd = f.den().valuationAtZero();
    e.logAbsLowest = std::log(std::abs(f.num().coeff(vn).toComplex())) -
                     std::log(std::abs(f.den().coeff(vd).toComplex()));
    return e;
}

double tildeT(const std::vector<TupleEntry>& entries, double r, const Quadrature& q) {
    if (entries.size() < 2) throw std::invalid_argument("tuple characteristic needs at least two entries");
    double correction = -std::numeric_limits<double>::infinity();
    for (const auto& e : entries) correction = std::max(correction, e.logAbsLowest);
    double mean = circleMean(
        [&](double theta) {
            std::complex<double> z = std::polar(r, theta);
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& e : entries) best = std::max(best, e.logAbs(z));
            return best;
        },
        q);
    return mean - correction;
}

double proximity(const RationalFunction& f, double r, const Quadrature& q) {
    return circleMean(
        [&](double theta) {
            double la = f.logAbs(std::polar(r, theta));
            if (std::isnan(la)) return std::nan("");
            return std::max(la, 0.0);
        },
        q);
}

Characteristic::Characteristic(RationalFunction f, const TolerancePolicy& tol) : f_(std::move(f)) {
    Divisor d = Divisor::fromRationalFunction(f_, tol);
    poles_ = LogIntegral(classicalCurve(d, PointKind::pole));
}

double Characteristic::m(double r, const Quadrature& q) const { return proximity(f_, r, q); }

double Characteristic::N(double r) const { return poles_.eval(r); }

double Characteristic::T(double r, const Quadrature& q) const { return m(r, q) + N(r); }

LemmaTReport lemmaTCheck(const Poly& a, const Poly& b, const std::vector<double>& grid,
                         const Quadrature& q, const TolerancePolicy& tol) {
    if (a.isZero() || b.isZero()) throw std::domain_error("lemma check needs nonzero polynomials");
    std::vector<TupleEntry> entries{TupleEntry::fromPoly(a), TupleEntry::fromPoly(b)};
    Characteristic quotient(RationalFunction(a, b), tol);
    LogIntegral common{commonZeroCurve(a, b, tol)};
    LemmaTReport rep;
    rep.grid = grid;
    for (double r : grid) {
        double res = tildeT(entries, r, q) - quotient.T(r, q) - common.eval(r);
        rep.residual.push_back(res);
    }
    double lo = rep.residual.front(), hi = rep.residual.front();
    for (double v : rep.residual) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    rep.spread = hi - lo;
    rep.residualAtFirst = rep.residual.front();
    return rep;
}

}  // namespace fallcalc
