#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fallcalc/casorati.hpp"
#include "fallcalc/config.hpp"
#include "fallcalc/nevanlinna.hpp"

namespace fallcalc {

enum class Verdict { holds, violated, inconclusive, preconditionFailed };

std::string verdictName(Verdict v);

struct PreconditionCheck {
    std::string name;
    bool passed = true;
    std::string witness;  // empty when passed
};

struct MarginReport {
    std::string theorem;
    std::vector<std::string> inputs;
    std::vector<double> grid;
    std::vector<double> lhs, rhs, margin;  // margin = rhs - lhs, negative is bad
    std::vector<PreconditionCheck> preconditions;
    Verdict verdict = Verdict::holds;
    double tolerance = 0.0;
    double violatedAt = 0.0;  // meaningful when verdict == violated
    std::string note;

    nlohmann::json toJson() const;
    bool preconditionsPassed() const;
};

// Negative margins beyond tolerance flip the verdict; a violation must span
// at least two decades of radii to count, otherwise it is inconclusive.
Verdict classifyMargins(const std::vector<double>& grid, const std::vector<double>& margin,
                        double tolerance, double* violatedAt);

// Degree form at large radius: max deg <= chain count of abc minus one,
// compared as exact integers.
MarginReport verifyPolyAbc(const Poly& a, const Poly& b, const Poly& c);

// Characteristic form on a radius grid with the (1 - delta - epsilon) log r
// slack; delta is zero for polynomial inputs.
MarginReport verifyEntireAbc(const Poly& a, const Poly& b, const Poly& c,
                             const std::vector<double>& grid, const Quadrature& q,
                             double epsilonSlack, const TolerancePolicy& tol = {});

// The three-sine configuration whose shifted zeros defeat the plain truncated
// count: margins must come out negative and grow with r.
MarginReport latticeSineCounterexample(const std::vector<double>& grid, const Quadrature& q);

MarginReport verifyMTerm(const std::vector<Poly>& fs, const std::vector<double>& grid,
                         const Quadrature& q, double epsilonSlack, const TolerancePolicy& tol = {});

struct SlopeData {
    long exactLhsSlope = 0;
    long exactRhsSlope = 0;
    double fdLhsSlope = 0.0;
    double fdRhsSlope = 0.0;
};

// Difference second-main-theorem comparison by exact large-radius slopes,
// with finite-difference slopes from the integrated curves as a cross-check.
MarginReport smtReport(const RationalFunction& f, const std::vector<GaussianRational>& values,
                       const Quadrature& q, const TolerancePolicy& tol = {},
                       SlopeData* slopes = nullptr);

struct LongValueInfo {
    std::optional<GaussianRational> value;  // nullopt encodes infinity
    bool complete = false;                  // at least one chain, all lengths >= 2
    std::vector<int> chainLengths;
};

struct CompleteLongValueReport {
    std::vector<LongValueInfo> perValue;
    std::vector<LongValueInfo> reported() const;
};

// Candidates default to the finite values f takes where delta f vanishes,
// plus infinity when f has poles.
CompleteLongValueReport completeLongValues(const RationalFunction& f,
                                           const std::vector<GaussianRational>& candidates,
                                           const TolerancePolicy& tol = {});
std::vector<GaussianRational> longValueCandidates(const RationalFunction& f,
                                                  const TolerancePolicy& tol = {});

struct ShareReport {
    bool shared = false;
    std::vector<GaussianRational> startsF, startsG;  // chain starts, multiset
};

// Chain starts of the a-divisors agree as multisets, lengths ignored.
ShareReport shiftingShare(const RationalFunction& f, const RationalFunction& g,
                          const std::optional<GaussianRational>& a, const Rat& radius,
                          const TolerancePolicy& tol = {});

struct FiveValueReport {
    std::vector<std::optional<GaussianRational>> values;
    std::vector<bool> shared;
    bool allShared = false;
    bool functionsEqual = false;
    Verdict verdict = Verdict::holds;  // violated when all five shared but f != g
    nlohmann::json toJson() const;
};

FiveValueReport fiveValueCheck(const RationalFunction& f, const RationalFunction& g,
                               const std::vector<std::optional<GaussianRational>>& values,
                               const TolerancePolicy& tol = {});

}  // namespace fallcalc
