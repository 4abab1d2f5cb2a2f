#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "fallcalc/divisor.hpp"

namespace fallcalc {

// Right-continuous integer step function of the radius. Jumps are stored at
// exact squared radii; the jump at radius zero is folded into `base`.
class StepCurve {
public:
    int base = 0;
    std::vector<std::pair<Rat, int>> jumps;  // (rho^2, step), sorted, rho^2 > 0

    int value(const Rat& rSq) const;
    int valueAt(double r) const;
    int finalValue() const;
    void addJump(const Rat& rhoSq, int step);
    void compact();  // merge equal breakpoints, drop zero steps
};

// N(r) = n(0) log r + sum_{0 < rho_k <= r} s_k log(r / rho_k): the exact
// integral of (n(t) - n(0))/t plus the n(0) log r term.
class LogIntegral {
public:
    explicit LogIntegral(const StepCurve& curve);
    LogIntegral() = default;
    double eval(double r) const;

private:
    double base_ = 0.0;
    std::vector<double> logRho_;      // ascending
    std::vector<double> stepSum_;     // prefix sums of steps
    std::vector<double> stepLogSum_;  // prefix sums of step * logRho
};

StepCurve classicalCurve(const Divisor& d, PointKind kind);

// Chain-start count as a function of the radius; piecewise constant with
// breakpoints where a point or one of its unit shifts crosses the circle.
// Not monotone: a chain start is absorbed when its predecessor enters.
StepCurve chainStartCurve(const Divisor& d, PointKind kind, double eps = 0.0);

int nClassical(const Divisor& d, const Rat& radius, PointKind kind);

// Chain count over the closed disc; closedForm = false runs the greedy
// decomposition instead, the two agree everywhere and both stay available.
int nBarDelta(const Divisor& d, const Rat& radius, PointKind kind, double eps = 0.0,
              bool closedForm = true);

// deg p minus deg gcd(p(z), p(z+1)): chain count of a polynomial divisor over
// the whole plane, exact with no root extraction.
int fullPlaneChainCount(const Poly& p);

// Multiplicity-respecting count of common zeros of two polynomials in the
// closed disc, i.e. the counting function of their gcd.
int commonZeroCount(const Poly& a, const Poly& b, const Rat& radius,
                    const TolerancePolicy& tol = {});
StepCurve commonZeroCurve(const Poly& a, const Poly& b, const TolerancePolicy& tol = {});

struct PairedCounts {
    double nf2;       // 2 N(r, f)
    double nDeltaP;   // N(r, delta f)  (poles)
    double nDeltaZ;   // N(r, 1/delta f)  (zeros)
    double value;     // 2 N(r,f) - N(r, delta f) + N(r, 1/delta f)
};
PairedCounts nPair(const RationalFunction& f, double r, const TolerancePolicy& tol = {});

struct ThetaDeltaResult {
    double exactRatio;    // from whole-plane degree slopes
    double gridInfimum;   // min over supplied grid of (N - Nbar) / T
    std::vector<double> gridValues;
};
// a = nullopt reads as the value infinity (poles). T values are supplied by
// the caller so this layer stays independent of quadrature.
ThetaDeltaResult thetaDelta(const RationalFunction& f, const std::optional<GaussianRational>& a,
                            const std::vector<double>& grid, const std::vector<double>& tValues,
                            const TolerancePolicy& tol = {});

struct ADCheckResult {
    bool holds;
    long lhs;   // sum over values of n(r, 1/(f - a_j))
    long rhs;   // n(r, 1/delta f) + sum of chain counts
    long nDeltaZeros;
    std::vector<long> perValueN;
    std::vector<long> perValueChain;
};
ADCheckResult aDCheck(const Poly& f, const std::vector<GaussianRational>& values, const Rat& radius,
                      const TolerancePolicy& tol = {});

}  // namespace fallcalc
