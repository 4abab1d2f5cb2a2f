#include "fallcalc/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace fallcalc {

int StepCurve::value(const Rat& rSq) const {
    int v = base;
    for (const auto& [rhoSq, step] : jumps) {
        if (rhoSq > rSq) break;
        v += step;
    }
    return v;
}

int StepCurve::valueAt(double r) const { return value(ratFromDouble(r) * ratFromDouble(r)); }

int StepCurve::finalValue() const {
    int v = base;
    for (const auto& [rhoSq, step] : jumps) v += step;
    return v;
}

void StepCurve::addJump(const Rat& rhoSq, int step) {
    if (rhoSq == 0) {
        base += step;
        return;
    }
    jumps.emplace_back(rhoSq, step);
}

void StepCurve::compact() {
    std::sort(jumps.begin(), jumps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Rat, int>> out;
    for (const auto& [rhoSq, step] : jumps) {
        if (!out.empty() && out.back().first == rhoSq) {
            out.back().second += step;
            if (out.back().second == 0) out.pop_back();
        } else if (step != 0) {
            out.emplace_back(rhoSq, step);
        }
    }
    jumps = std::move(out);
}

LogIntegral::LogIntegral(const StepCurve& curve) {
    base_ = curve.base;
    double s = 0.0, sl = 0.0;
    for (const auto& [rhoSq, step] : curve.jumps) {
        double logRho = 0.5 * std::log(static_cast<double>(rhoSq));
        s += step;
        sl += step * logRho;
        logRho_.push_back(logRho);
        stepSum_.push_back(s);
        stepLogSum_.push_back(sl);
    }
}

double LogIntegral::eval(double r) const {
    if (r <= 0) throw std::domain_error("integrated counting needs r > 0");
    double lr = std::log(r);
    double v = base_ * lr;
    auto it = std::upper_bound(logRho_.begin(), logRho_.end(), lr);
    if (it != logRho_.begin()) {
        size_t k = static_cast<size_t>(it - logRho_.begin()) - 1;
        v += stepSum_[k] * lr - stepLogSum_[k];
    }
    return v;
}

StepCurve classicalCurve(const Divisor& d, PointKind kind) {
    StepCurve c;
    for (const auto& p : d.points()) {
        int m = p.mult(kind);
        if (m > 0) c.addJump(p.at.normSq(), m);
    }
    c.compact();
    return c;
}

StepCurve chainStartCurve(const Divisor& d, PointKind kind, double eps) {
    // Each point w contributes mult(w) once it enters the disc, less the
    // shared part min(mult(w), mult(pred)) once its chain predecessor has
    // entered too; the curve is the sum of these per-point step functions.
    StepCurve c;
    for (const auto& e : chainNeighborTable(d, kind, eps)) {
        int shared = std::min(e.mult, e.predMult);
        if (shared == 0) {
            c.addJump(e.wSq, e.mult);
        } else if (e.predSq <= e.wSq) {
            c.addJump(e.wSq, e.mult - shared);
        } else {
            c.addJump(e.wSq, e.mult);
            c.addJump(e.predSq, -shared);
        }
    }
    c.compact();
    return c;
}

int nClassical(const Divisor& d, const Rat& radius, PointKind kind) {
    return classicalCurve(d, kind).value(radius * radius);
}

int nBarDelta(const Divisor& d, const Rat& radius, PointKind kind, double eps, bool closedForm) {
    if (closedForm) return chainCountClosedForm(d, radius, kind, eps);
    return static_cast<int>(chainDecompose(d, radius, kind, eps).size());
}

int fullPlaneChainCount(const Poly& p) {
    if (p.isZero()) throw std::domain_error("chain count of the zero polynomial");
    if (p.isConstant()) return 0;
    Poly g = gcd(p, p.shifted(GaussianRational(1)));
    return p.degree() - g.degree();
}

namespace {

Divisor zeroDivisorOf(const Poly& p, const TolerancePolicy& tol) {
    Divisor d;
    if (p.degree() <= 0) return d;
    try {
        FactoredPoly fp = exactRoots(p);
        for (const auto& [root, mult] : fp.roots) d.addZero(root, mult);
    } catch (const ExactFactorizationIncomplete&) {
        for (const auto& r : numericRoots(p, tol)) d.addZero(gaussianFromComplex(r.at), r.mult);
    }
    return d;
}

}  // namespace

int commonZeroCount(const Poly& a, const Poly& b, const Rat& radius, const TolerancePolicy& tol) {
    return commonZeroCurve(a, b, tol).value(radius * radius);
}

StepCurve commonZeroCurve(const Poly& a, const Poly& b, const TolerancePolicy& tol) {
    Poly g = gcd(a, b);
    return classicalCurve(zeroDivisorOf(g, tol), PointKind::zero);
}

PairedCounts nPair(const RationalFunction& f, double r, const TolerancePolicy& tol) {
    RationalFunction df = f.delta();
    Divisor dPoles = Divisor::fromRationalFunction(f, tol);
    Divisor dDelta = Divisor::fromRationalFunction(df, tol);
    LogIntegral Nf(classicalCurve(dPoles, PointKind::pole));
    LogIntegral NdP(classicalCurve(dDelta, PointKind::pole));
    LogIntegral NdZ(classicalCurve(dDelta, PointKind::zero));
    PairedCounts out;
    out.nf2 = 2.0 * Nf.eval(r);
    out.nDeltaP = NdP.eval(r);
    out.nDeltaZ = NdZ.eval(r);
    out.value = out.nf2 - out.nDeltaP + out.nDeltaZ;
    return out;
}

ThetaDeltaResult thetaDelta(const RationalFunction& f, const std::optional<GaussianRational>& a,
                            const std::vector<double>& grid, const std::vector<double>& tValues,
                            const TolerancePolicy& tol) {
    if (grid.size() != tValues.size())
        throw std::invalid_argument("grid and characteristic values must align");
    // target polynomial: zeros of f - a, or poles of f
    Poly target;
    if (a) {
        RationalFunction g = f - RationalFunction::constant(*a);
        target = g.num();
    } else {
        target = f.den();
    }
    ThetaDeltaResult res;
    int slopeT = f.degreeMax();
    if (slopeT <= 0) throw std::domain_error("deficiency needs a nonconstant function");
    int slopeN = target.degree() < 0 ? 0 : target.degree();
    int slopeBar = target.degree() > 0 ? fullPlaneChainCount(target) : 0;
    res.exactRatio = static_cast<double>(slopeN - slopeBar) / slopeT;

    Divisor d = zeroDivisorOf(target, tol);
    LogIntegral N(classicalCurve(d, PointKind::zero));
    LogIntegral Nbar(chainStartCurve(d, PointKind::zero, tol.unit_gap_eps));
    res.gridInfimum = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < grid.size(); ++k) {
        double v = (N.eval(grid[k]) - Nbar.eval(grid[k])) / tValues[k];
        res.gridValues.push_back(v);
        res.gridInfimum = std::min(res.gridInfimum, v);
    }
    return res;
}

ADCheckResult aDCheck(const Poly& f, const std::vector<GaussianRational>& values, const Rat& radius,
                      const TolerancePolicy& tol) {
    if (f.isConstant()) throw std::domain_error("difference value counting needs a nonconstant polynomial");
    ADCheckResult res{};
    Poly df = f.delta();
    Divisor dDelta = zeroDivisorOf(df, tol);
    res.nDeltaZeros = nClassical(dDelta, radius, PointKind::zero);
    res.lhs = 0;
    res.rhs = res.nDeltaZeros;
    for (const auto& a : values) {
        Poly fa = f - Poly(a);
        Divisor d = zeroDivisorOf(fa, tol);
        long nv = nClassical(d, radius, PointKind::zero);
        long cv = chainCountClosedForm(d, radius, PointKind::zero, tol.unit_gap_eps);
        res.perValueN.push_back(nv);
        res.perValueChain.push_back(cv);
        res.lhs += nv;
        res.rhs += cv;
    }
    res.holds = res.lhs <= res.rhs;
    return res;
}

}  // namespace fallcalc
