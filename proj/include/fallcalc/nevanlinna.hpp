#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fallcalc/counting.hpp"

namespace fallcalc {

struct Quadrature {
    int nodes = 4096;
    double nudgeFraction = 1e-3;  // of the node spacing, applied when a node is singular
};

// Mean over the circle of a log-magnitude integrand theta -> g(theta).
// Non-finite samples trigger one retry with all nodes shifted.
double circleMean(const std::function<double(double)>& g, const Quadrature& q);

// log |sin(pi z)| without overflow for large |Im z|.
double logAbsSinPi(std::complex<double> z);

// Per-function data the tuple characteristic needs: log magnitude on circles
// and the log magnitude of the lowest nonzero coefficient at the origin.
struct TupleEntry {
    std::function<double(std::complex<double>)> logAbs;
    double logAbsLowest = 0.0;

    static TupleEntry fromPoly(const Poly& p);
    static TupleEntry fromRatFun(const RationalFunction& f);
};

// (1/2pi) int log max_j |a_j(r e^{i theta})| d theta  -  max_j log |c_j|
// where c_j is the lowest nonzero coefficient of a_j at the origin.
double tildeT(const std::vector<TupleEntry>& entries, double r, const Quadrature& q);

double proximity(const RationalFunction& f, double r, const Quadrature& q);

// m + N with the pole-counting integral prepared once.
class Characteristic {
public:
    explicit Characteristic(RationalFunction f, const TolerancePolicy& tol = {});
    double m(double r, const Quadrature& q) const;
    double N(double r) const;
    double T(double r, const Quadrature& q) const;
    const RationalFunction& function() const { return f_; }

private:
    RationalFunction f_;
    LogIntegral poles_;
};

struct LemmaTReport {
    std::vector<double> grid;
    std::vector<double> residual;  // tildeT - T(a/b) - R_{a,b}
    double spread = 0.0;           // max - min residual over the grid
    double residualAtFirst = 0.0;
};

// The two-entry characteristic against T(r, a/b) plus the integrated common
// zero count; the leftover term is constant in r up to quadrature error.
LemmaTReport lemmaTCheck(const Poly& a, const Poly& b, const std::vector<double>& grid,
                         const Quadrature& q, const TolerancePolicy& tol = {});

}  // namespace fallcalc
