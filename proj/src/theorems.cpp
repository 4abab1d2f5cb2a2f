#include "fallcalc/theorems.hpp"

#include "fallcalc/io.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fallcalc {

using nlohmann::json;

std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::preconditionFailed: return "precondition_failed";
    }
    return "unknown";
}

bool MarginReport::preconditionsPassed() const {
    for (const auto& p : preconditions)
        if (!p.passed) return false;
    return true;
}

json MarginReport::toJson() const {
    json j;
    j["theorem"] = theorem;
    j["inputs"] = inputs;
    j["grid"] = grid;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["margin"] = margin;
    json pre = json::array();
    for (const auto& p : preconditions) {
        json e{{"name", p.name}, {"passed", p.passed}};
        if (!p.witness.empty()) e["witness"] = p.witness;
        pre.push_back(std::move(e));
    }
    j["preconditions"] = pre;
    j["verdict"] = verdictName(verdict);
    j["tolerance"] = tolerance;
    if (verdict == Verdict::violated) j["violated_at"] = violatedAt;
    if (!note.empty()) j["note"] = note;
    return j;
}

Verdict classifyMargins(const std::vector<double>& grid, const std::vector<double>& margin,
                        double tolerance, double* violatedAt) {
    double lowR = 0.0, highR = 0.0;
    bool any = false;
    for (size_t k = 0; k < margin.size(); ++k) {
        if (margin[k] < -tolerance) {
            if (!any) {
                lowR = highR = grid[k];
                if (violatedAt) *violatedAt = grid[k];
            }
            lowR = std::min(lowR, grid[k]);
            highR = std::max(highR, grid[k]);
            any = true;
        }
    }
    if (!any) return Verdict::holds;
    int decades = static_cast<int>(std::floor(std::log10(highR))) -
                  static_cast<int>(std::floor(std::log10(lowR))) + 1;
    return decades >= 2 ? Verdict::violated : Verdict::inconclusive;
}

namespace {

double cauchyRootBound(const Poly& p) {
    if (p.degree() <= 0) return 0.0;
    double lead = std::abs(p.leading().toComplex());
    double best = 0.0;
    for (int k = 0; k < p.degree(); ++k)
        best = std::max(best, std::abs(p.coeff(k).toComplex()) / lead);
    return 1.0 + best;
}

std::string pairName(const std::string& x, const std::string& y) { return x + "," + y; }

void checkAbcPreconditions(MarginReport& rep, const Poly& a, const Poly& b, const Poly& c) {
    const char* names[3] = {"a", "b", "c"};
    const Poly* ps[3] = {&a, &b, &c};
    bool nonzero = true;
    for (int i = 0; i < 3; ++i)
        if (ps[i]->isZero()) nonzero = false;
    rep.preconditions.push_back({"nonzero", nonzero, nonzero ? "" : "a zero polynomial entered"});
    bool identity = (a + b) == c;
    rep.preconditions.push_back({"identity a+b=c", identity, identity ? "" : "a+b differs from c"});
    bool notAllConst = !(a.isConstant() && b.isConstant() && c.isConstant());
    rep.preconditions.push_back({"not all constant", notAllConst, notAllConst ? "" : "all three constant"});
    bool primeAll = true;
    std::string witness;
    if (nonzero) {
        for (int i = 0; i < 3 && primeAll; ++i)
            for (int j = i + 1; j < 3 && primeAll; ++j) {
                auto r = relativelyShiftingPrime(*ps[i], *ps[j]);
                if (!r.prime) {
                    primeAll = false;
                    std::ostringstream os;
                    os << "pair (" << pairName(names[i], names[j]) << ")";
                    if (r.witness)
                        os << ": zeros at " << r.witness->first.str() << " and "
                           << r.witness->second.str();
                    witness = os.str();
                }
            }
    } else {
        primeAll = false;
        witness = "zero polynomial";
    }
    rep.preconditions.push_back({"pairwise shifting prime", primeAll, witness});
}

Divisor zeroDivisorOfPoly(const Poly& p, const TolerancePolicy& tol) {
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

MarginReport verifyPolyAbc(const Poly& a, const Poly& b, const Poly& c) {
    MarginReport rep;
    rep.theorem = "difference-abc-polynomial";
    rep.inputs = {a.str(), b.str(), c.str()};
    rep.tolerance = 0.0;
    checkAbcPreconditions(rep, a, b, c);
    if (!rep.preconditionsPassed()) {
        rep.verdict = Verdict::preconditionFailed;
        return rep;
    }
    Poly abc = a * b * c;
    long lhs = std::max(a.degree(), std::max(b.degree(), c.degree()));
    long rhs = fullPlaneChainCount(abc) - 1;
    double radius = cauchyRootBound(abc) + 2.0;
    rep.grid = {radius};
    rep.lhs = {static_cast<double>(lhs)};
    rep.rhs = {static_cast<double>(rhs)};
    rep.margin = {static_cast<double>(rhs - lhs)};
    rep.verdict = rhs >= lhs ? Verdict::holds : Verdict::violated;
    if (rep.verdict == Verdict::violated) rep.violatedAt = radius;
    rep.note = "exact integers; chain count of abc via deg - deg gcd(p(z), p(z+1)), valid at any radius beyond all zeros";
    return rep;
}

MarginReport verifyEntireAbc(const Poly& a, const Poly& b, const Poly& c,
                             const std::vector<double>& grid, const Quadrature& q,
                             double epsilonSlack, const TolerancePolicy& tol) {
    MarginReport rep;
    rep.theorem = "difference-abc-characteristic";
    rep.inputs = {a.str(), b.str(), c.str()};
    rep.tolerance = 0.05;
    checkAbcPreconditions(rep, a, b, c);
    if (!rep.preconditionsPassed()) {
        rep.verdict = Verdict::preconditionFailed;
        return rep;
    }
    rep.grid = grid;
    std::vector<TupleEntry> entries{TupleEntry::fromPoly(a), TupleEntry::fromPoly(b),
                                    TupleEntry::fromPoly(c)};
    Divisor d = zeroDivisorOfPoly(a * b * c, tol);
    LogIntegral nbar{chainStartCurve(d, PointKind::zero, tol.unit_gap_eps)};
    for (double r : grid) {
        double lhs = tildeT(entries, r, q);
        double rhs = nbar.eval(r) - (1.0 - epsilonSlack) * std::log(r);
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        rep.margin.push_back(rhs - lhs);
    }
    rep.verdict = classifyMargins(rep.grid, rep.margin, rep.tolerance, &rep.violatedAt);
    rep.note = "rhs is the integrated chain count of 1/(abc) minus (1-epsilon) log r, epsilon=" +
               formatDouble(epsilonSlack);
    return rep;
}

MarginReport latticeSineCounterexample(const std::vector<double>& grid, const Quadrature& q) {
    MarginReport rep;
    rep.theorem = "difference-abc-characteristic-lattice-counterexample";
    rep.inputs = {"sin(pi z)", "sin(pi (z - 1/2))", "sqrt(2) sin(pi (z - 1/4))"};
    rep.tolerance = 0.05;

    // identity sampled on a fixed pseudo-random set inside |z| <= 2
    bool identityOk = true;
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    auto nextUnit = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>((state >> 11) & ((1ULL << 40) - 1)) / double(1ULL << 40);
    };
    for (int s = 0; s < 64 && identityOk; ++s) {
        std::complex<double> z(4.0 * nextUnit() - 2.0, 4.0 * nextUnit() - 2.0);
        auto spi = [](std::complex<double> w) { return std::sin(M_PI * w); };
        std::complex<double> av = spi(z), bv = spi(z - 0.5), cv = std::sqrt(2.0) * spi(z - 0.25);
        double scale = 1.0 + std::abs(av) + std::abs(bv) + std::abs(cv);
        if (std::abs(av + bv - cv) > 1e-9 * scale) identityOk = false;
    }
    rep.preconditions.push_back({"identity a+b=c", identityOk, identityOk ? "" : "sampled identity failed"});

    double top = 0.0;
    for (double r : grid) top = std::max(top, r);
    Rat enumRadius = ratFromDouble(top) + 2;
    auto latticeOf = [](const Rat& offset) {
        auto src = std::make_shared<LatticeSource>();
        src->addRun({GaussianRational(offset), LatticeSource::Extent::both, 1, 0});
        return src;
    };
    auto la = latticeOf(Rat(0)), lb = latticeOf(Rat(1, 2)), lc = latticeOf(Rat(1, 4));
    bool primeAll = true;
    std::string witness;
    std::shared_ptr<LatticeSource> ls[3] = {la, lb, lc};
    for (int i = 0; i < 3 && primeAll; ++i)
        for (int j = i + 1; j < 3 && primeAll; ++j) {
            auto r = relativelyShiftingPrime(ls[i]->enumerate(enumRadius), ls[j]->enumerate(enumRadius),
                                             enumRadius, 0.0);
            if (!r.prime) {
                primeAll = false;
                witness = "zeros at " + r.witness->first.str() + " and " + r.witness->second.str();
            }
        }
    rep.preconditions.push_back({"pairwise shifting prime", primeAll, witness});
    if (!rep.preconditionsPassed()) {
        rep.verdict = Verdict::preconditionFailed;
        return rep;
    }

    LatticeSource merged;
    merged.addRun({GaussianRational(Rat(0)), LatticeSource::Extent::both, 1, 0});
    merged.addRun({GaussianRational(Rat(1, 2)), LatticeSource::Extent::both, 1, 0});
    merged.addRun({GaussianRational(Rat(1, 4)), LatticeSource::Extent::both, 1, 0});
    Divisor d = merged.enumerate(enumRadius);
    LogIntegral nbar{chainStartCurve(d, PointKind::zero, 0.0)};

    std::vector<TupleEntry> entries(3);
    entries[0].logAbs = [](std::complex<double> z) { return logAbsSinPi(z); };
    entries[0].logAbsLowest = std::log(M_PI);
    entries[1].logAbs = [](std::complex<double> z) { return logAbsSinPi(z - 0.5); };
    entries[1].logAbsLowest = 0.0;  // |sin(-pi/2)| = 1
    entries[2].logAbs = [](std::complex<double> z) { return 0.5 * std::log(2.0) + logAbsSinPi(z - 0.25); };
    entries[2].logAbsLowest = 0.0;  // |sqrt(2) sin(-pi/4)| = 1

    rep.grid = grid;
    for (double r : grid) {
        double lhs = tildeT(entries, r, q);
        double rhs = nbar.eval(r) - 0.9 * std::log(r);
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        rep.margin.push_back(rhs - lhs);
    }
    rep.verdict = classifyMargins(rep.grid, rep.margin, rep.tolerance, &rep.violatedAt);
    rep.note = "three entire functions with shifted zero lattices; the truncated-count bound fails by ~r";
    return rep;
}

MarginReport verifyMTerm(const std::vector<Poly>& fs, const std::vector<double>& grid,
                         const Quadrature& q, double epsilonSlack, const TolerancePolicy& tol) {
    MarginReport rep;
    rep.theorem = "difference-mterm-characteristic";
    for (const auto& f : fs) rep.inputs.push_back(f.str());
    rep.tolerance = 0.05;
    size_t count = fs.size();
    long m = static_cast<long>(count) - 1;
    bool arity = m > 2;
    rep.preconditions.push_back({"m > 2", arity, arity ? "" : "needs at least four functions"});
    bool nonzero = true;
    for (const auto& f : fs)
        if (f.isZero()) nonzero = false;
    rep.preconditions.push_back({"nonzero", nonzero, nonzero ? "" : "a zero polynomial entered"});
    if (arity && nonzero) {
        Poly sum;
        for (size_t k = 0; k + 1 < count; ++k) sum = sum + fs[k];
        bool identity = sum == fs.back();
        rep.preconditions.push_back(
            {"identity f1+...+fm = f(m+1)", identity, identity ? "" : "sum mismatch"});
        bool prime = true;
        std::string witness;
        for (size_t i = 0; i < count && prime; ++i)
            for (size_t j = i + 1; j < count && prime; ++j) {
                auto r = relativelyShiftingPrime(fs[i], fs[j]);
                if (!r.prime) {
                    prime = false;
                    std::ostringstream os;
                    os << "pair (f" << i + 1 << ",f" << j + 1 << ")";
                    if (r.witness)
                        os << ": zeros at " << r.witness->first.str() << " and " << r.witness->second.str();
                    witness = os.str();
                }
            }
        rep.preconditions.push_back({"pairwise shifting prime", prime, witness});
        std::vector<RationalFunction> lead;
        for (size_t k = 0; k + 1 < count; ++k) lead.push_back(RationalFunction::fromPoly(fs[k]));
        bool indep = linearlyIndependent(lead);
        rep.preconditions.push_back(
            {"casorati nonvanishing", indep, indep ? "" : "f1..fm linearly dependent"});
    }
    if (!rep.preconditionsPassed()) {
        rep.verdict = Verdict::preconditionFailed;
        return rep;
    }

    std::vector<TupleEntry> entries;
    Poly prod(GaussianRational(1));
    for (const auto& f : fs) {
        entries.push_back(TupleEntry::fromPoly(f));
        prod = prod * f;
    }
    Divisor d = zeroDivisorOfPoly(prod, tol);
    LogIntegral nbar{chainStartCurve(d, PointKind::zero, tol.unit_gap_eps)};
    rep.grid = grid;
    double mm = static_cast<double>(m);
    for (double r : grid) {
        double lhs = tildeT(entries, r, q);
        double rhs = (mm - 1.0) * nbar.eval(r) -
                     0.5 * mm * (mm - 1.0) * (1.0 - epsilonSlack) * std::log(r);
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        rep.margin.push_back(rhs - lhs);
    }
    rep.verdict = classifyMargins(rep.grid, rep.margin, rep.tolerance, &rep.violatedAt);
    rep.note = "m = " + std::to_string(m) + ", epsilon = " + formatDouble(epsilonSlack);
    return rep;
}

MarginReport smtReport(const RationalFunction& f, const std::vector<GaussianRational>& values,
                       const Quadrature& q, const TolerancePolicy& tol, SlopeData* slopes) {
    MarginReport rep;
    rep.theorem = "difference-second-main";
    rep.inputs.push_back(f.str());
    for (const auto& a : values) rep.inputs.push_back(a.str());
    rep.tolerance = 0.0;

    bool nonconst = !f.isConstant();
    rep.preconditions.push_back({"nonconstant", nonconst, nonconst ? "" : "constant function"});
    std::set<std::pair<Rat, Rat>> uniq;
    for (const auto& a : values) uniq.insert({a.re, a.im});
    bool distinct = uniq.size() == values.size() && values.size() >= 2;
    rep.preconditions.push_back(
        {"at least two distinct finite values", distinct, distinct ? "" : "values not distinct"});
    bool deltaNonzero = nonconst && !f.delta().isZero();
    rep.preconditions.push_back(
        {"delta f not identically zero", deltaNonzero, deltaNonzero ? "" : "delta f vanishes"});
    if (!rep.preconditionsPassed()) {
        rep.verdict = Verdict::preconditionFailed;
        return rep;
    }

    long qn = static_cast<long>(values.size());
    long lhsSlope = (qn - 1) * f.degreeMax();
    auto chainSlope = [](const Poly& p) -> long {
        return p.degree() > 0 ? fullPlaneChainCount(p) : 0;
    };
    long rhsSlope = chainSlope(f.den());
    std::vector<Poly> targets;
    for (const auto& a : values) {
        RationalFunction g = f - RationalFunction::constant(a);
        targets.push_back(g.num());
        rhsSlope += chainSlope(g.num());
    }

    // finite-difference slopes from assembled curves between 10^3 and 10^4
    double r1 = 1e3, r2 = 1e4;
    Characteristic chi(f, tol);
    double dlog = std::log(r2) - std::log(r1);
    double lhs1 = (qn - 1) * chi.T(r1, q), lhs2 = (qn - 1) * chi.T(r2, q);
    Divisor poleDiv = Divisor::fromRationalFunction(f, tol);
    LogIntegral nbarPoles{chainStartCurve(poleDiv, PointKind::pole, tol.unit_gap_eps)};
    double rhs1 = nbarPoles.eval(r1), rhs2 = nbarPoles.eval(r2);
    for (const auto& t : targets) {
        Divisor d = zeroDivisorOfPoly(t, tol);
        LogIntegral nb{chainStartCurve(d, PointKind::zero, tol.unit_gap_eps)};
        rhs1 += nb.eval(r1);
        rhs2 += nb.eval(r2);
    }
    if (slopes) {
        slopes->exactLhsSlope = lhsSlope;
        slopes->exactRhsSlope = rhsSlope;
        slopes->fdLhsSlope = (lhs2 - lhs1) / dlog;
        slopes->fdRhsSlope = (rhs2 - rhs1) / dlog;
    }

    rep.grid = {r1, r2};
    rep.lhs = {lhs1, lhs2};
    rep.rhs = {rhs1, rhs2};
    rep.margin = {static_cast<double>(rhsSlope - lhsSlope), static_cast<double>(rhsSlope - lhsSlope)};
    rep.verdict = rhsSlope >= lhsSlope ? Verdict::holds : Verdict::violated;
    if (rep.verdict == Verdict::violated) rep.violatedAt = r2;
    std::ostringstream note;
    note << "exact slopes: lhs " << lhsSlope << ", rhs " << rhsSlope
         << "; the small error term S(r, f) is o(T) and cannot move slopes";
    rep.note = note.str();
    return rep;
}

CompleteLongValueReport completeLongValues(const RationalFunction& f,
                                           const std::vector<GaussianRational>& candidates,
                                           const TolerancePolicy& tol) {
    CompleteLongValueReport rep;
    auto chainInfo = [&](const Divisor& d, PointKind kind) {
        LongValueInfo info;
        if (!d.empty()) {
            auto chains = chainDecompose(d, d.coveringRadius(), kind, tol.unit_gap_eps);
            for (const auto& c : chains) info.chainLengths.push_back(c.length);
            info.complete = !chains.empty();
            for (const auto& c : chains)
                if (c.length < 2) info.complete = false;
        }
        return info;
    };
    for (const auto& a : candidates) {
        RationalFunction g = f - RationalFunction::constant(a);
        Divisor d = zeroDivisorOfPoly(g.num(), tol);
        LongValueInfo info = chainInfo(d, PointKind::zero);
        info.value = a;
        rep.perValue.push_back(std::move(info));
    }
    Divisor all = Divisor::fromRationalFunction(f, tol);
    Divisor poles;
    for (const auto& p : all.points())
        if (p.pmult > 0) poles.addPole(p.at, p.pmult);
    LongValueInfo inf = chainInfo(poles, PointKind::pole);
    inf.value = std::nullopt;
    rep.perValue.push_back(std::move(inf));
    return rep;
}

std::vector<LongValueInfo> CompleteLongValueReport::reported() const {
    std::vector<LongValueInfo> out;
    for (const auto& v : perValue)
        if (v.complete) out.push_back(v);
    return out;
}

std::vector<GaussianRational> longValueCandidates(const RationalFunction& f,
                                                  const TolerancePolicy& tol) {
    std::vector<GaussianRational> out;
    RationalFunction df = f.delta();
    if (df.isZero()) return out;
    if (df.num().degree() <= 0) return out;
    std::vector<std::complex<double>> values;
    for (const auto& r : numericRoots(df.num(), tol)) {
        std::complex<double> w = r.at;
        std::complex<double> v = f.evalC(w);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) continue;
        bool dup = false;
        for (auto seen : values)
            if (std::abs(seen - v) <= tol.root_eps * (1.0 + std::abs(seen))) dup = true;
        if (dup) continue;
        values.push_back(v);
        // prefer an exact value when the critical point is recognizably rational
        GaussianRational wr(rationalize(w.real(), 1000), rationalize(w.imag(), 1000));
        std::complex<double> diff = wr.toComplex() - w;
        if (std::abs(diff) < 1e-9) {
            auto exact = f.evalExact(wr);
            auto dfExact = df.evalExact(wr);
            if (exact && dfExact && dfExact->isZero()) {
                out.push_back(*exact);
                continue;
            }
        }
        out.push_back(gaussianFromComplex(v));
    }
    return out;
}

ShareReport shiftingShare(const RationalFunction& f, const RationalFunction& g,
                          const std::optional<GaussianRational>& a, const Rat& radius,
                          const TolerancePolicy& tol) {
    auto divisorFor = [&](const RationalFunction& h) {
        if (a) {
            RationalFunction s = h - RationalFunction::constant(*a);
            return std::make_pair(zeroDivisorOfPoly(s.num(), tol), PointKind::zero);
        }
        Divisor all = Divisor::fromRationalFunction(h, tol);
        Divisor poles;
        for (const auto& p : all.points())
            if (p.pmult > 0) poles.addPole(p.at, p.pmult);
        return std::make_pair(poles, PointKind::pole);
    };
    auto [df, kf] = divisorFor(f);
    auto [dg, kg] = divisorFor(g);
    ShareReport rep;
    for (const auto& c : chainDecompose(df, radius, kf, tol.unit_gap_eps)) rep.startsF.push_back(c.start);
    for (const auto& c : chainDecompose(dg, radius, kg, tol.unit_gap_eps)) rep.startsG.push_back(c.start);
    std::sort(rep.startsF.begin(), rep.startsF.end());
    std::sort(rep.startsG.begin(), rep.startsG.end());
    if (rep.startsF.size() != rep.startsG.size()) return rep;
    double eps = tol.unit_gap_eps;
    for (size_t k = 0; k < rep.startsF.size(); ++k) {
        std::complex<double> x = rep.startsF[k].toComplex(), y = rep.startsG[k].toComplex();
        if (std::abs(x - y) > eps) return rep;
    }
    rep.shared = true;
    return rep;
}

FiveValueReport fiveValueCheck(const RationalFunction& f, const RationalFunction& g,
                               const std::vector<std::optional<GaussianRational>>& values,
                               const TolerancePolicy& tol) {
    FiveValueReport rep;
    rep.values = values;
    // radius beyond every zero, pole, and shifted partner of both functions
    Rat radius = 4;
    for (const RationalFunction* h : {&f, &g}) {
        Divisor d = Divisor::fromRationalFunction(*h, tol);
        if (!d.empty()) radius = std::max(radius, d.coveringRadius(3));
        for (const auto& v : values) {
            if (!v) continue;
            RationalFunction s = *h - RationalFunction::constant(*v);
            Divisor dz = zeroDivisorOfPoly(s.num(), tol);
            if (!dz.empty()) radius = std::max(radius, dz.coveringRadius(3));
        }
    }
    rep.allShared = true;
    for (const auto& v : values) {
        bool sh = shiftingShare(f, g, v, radius, tol).shared;
        rep.shared.push_back(sh);
        if (!sh) rep.allShared = false;
    }
    rep.functionsEqual = f == g;
    rep.verdict = (rep.allShared && !rep.functionsEqual) ? Verdict::violated : Verdict::holds;
    return rep;
}

json FiveValueReport::toJson() const {
    json j;
    json vals = json::array();
    for (size_t k = 0; k < values.size(); ++k) {
        json e;
        e["value"] = values[k] ? values[k]->str() : "inf";
        e["shared"] = shared[k];
        vals.push_back(std::move(e));
    }
    j["values"] = vals;
    j["all_shared"] = allShared;
    j["functions_equal"] = functionsEqual;
    j["verdict"] = verdictName(verdict);
    return j;
}

}  // namespace fallcalc
