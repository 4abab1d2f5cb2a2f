#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fallcalc/ratfun.hpp"
#include "fallcalc/roots.hpp"
#include "fallcalc/tolerance.hpp"

namespace fallcalc {

enum class PointKind { zero, pole };

struct DivisorPoint {
    GaussianRational at;
    int zmult = 0;
    int pmult = 0;

    int mult(PointKind k) const { return k == PointKind::zero ? zmult : pmult; }
};

// Finite multiset of zeros and poles, sorted by position. A point never
// carries both kinds; opposite multiplicities cancel when added.
class Divisor {
public:
    void add(const GaussianRational& at, int zmult, int pmult);
    void addZero(const GaussianRational& at, int mult = 1) { add(at, mult, 0); }
    void addPole(const GaussianRational& at, int mult = 1) { add(at, 0, mult); }

    const std::vector<DivisorPoint>& points() const { return pts_; }
    bool empty() const { return pts_.empty(); }

    // Smallest integer radius whose closed disc contains every point, plus margin.
    Rat coveringRadius(int margin = 2) const;

    // Bulk construction: sorts, merges duplicates, cancels opposite kinds.
    static Divisor fromUnsorted(std::vector<DivisorPoint> pts);

    static Divisor fromFactored(const FactoredPoly& zeros, const FactoredPoly* poles = nullptr);
    static Divisor fromNumeric(const std::vector<NumericRoot>& zeros,
                               const std::vector<NumericRoot>& poles = {});
    // Exact roots when the factorization completes, numeric otherwise.
    static Divisor fromRationalFunction(const RationalFunction& f, const TolerancePolicy& tol = {});

private:
    std::vector<DivisorPoint> pts_;
};

struct Chain {
    GaussianRational start;
    int length = 0;
    PointKind kind = PointKind::zero;
    bool clipped = false;  // the run continues beyond the disc boundary

    bool operator==(const Chain& o) const {
        return start == o.start && length == o.length && kind == o.kind;
    }
    bool operator<(const Chain& o) const {
        if (!(start == o.start)) return start < o.start;
        if (length != o.length) return length < o.length;
        return static_cast<int>(kind) < static_cast<int>(o.kind);
    }
};

// Number of consecutive zeros upward from `at` (or poles downward), staying
// inside the closed disc |z| <= radius. Zero when `at` is not of that kind.
int lengthAt(const Divisor& d, const Rat& radius, const GaussianRational& at, PointKind kind,
             double eps = 0.0);

// Greedy decomposition into maximal unit-multiplicity runs: repeatedly pick a
// point whose chain predecessor is absent from the current divisor, strip one
// unit along the maximal run, and emit it. The result does not depend on the
// selection order; pass `order` to randomize it (used to test exactly that).
std::vector<Chain> chainDecompose(const Divisor& d, const Rat& radius, PointKind kind,
                                  double eps = 0.0, std::mt19937_64* order = nullptr);

// Closed-form chain-start count over the closed disc; must match the greedy
// decomposition size and is kept as an independent second route on purpose.
int chainCountClosedForm(const Divisor& d, const Rat& radius, PointKind kind, double eps = 0.0);

// Same count parameterized by the exact squared radius (curve building hits
// breakpoints that have no rational square root).
int chainCountClosedFormSq(const Divisor& d, const Rat& radiusSq, PointKind kind, double eps = 0.0);

// Truncated count with the shift partner looked up in the whole plane rather
// than the disc; differs from chainCountClosedForm exactly on boundary runs.
int nTildeIKLT(const Divisor& d, const Rat& radius, double eps = 0.0);

// One row per point of the kind, with its chain predecessor resolved under
// the same eps rule the closed form uses. predMult is zero when absent.
struct ChainNeighborEntry {
    Rat wSq;
    int mult = 0;
    int predMult = 0;
    Rat predSq;
};
std::vector<ChainNeighborEntry> chainNeighborTable(const Divisor& d, PointKind kind,
                                                   double eps = 0.0);

FactoredPoly differenceRadical(const FactoredPoly& f);
FactoredPoly classicRadical(const FactoredPoly& f);

struct ShiftingPrimeResult {
    bool prime = true;
    // adjacency witness: (w, w+1) with w a zero of one function, w+1 of the other
    std::optional<std::pair<GaussianRational, GaussianRational>> witness;
};

// Zero sets restricted to the closed disc; adjacency at gap exactly one in
// either pairing direction breaks primeness.
ShiftingPrimeResult relativelyShiftingPrime(const Divisor& zerosF, const Divisor& zerosG,
                                            const Rat& radius, double eps = 0.0);

// Whole-plane version for polynomials: adjacency exists iff gcd(f(z), g(z+1))
// or gcd(g(z), f(z+1)) is nonconstant. Exact for irrational roots too.
ShiftingPrimeResult relativelyShiftingPrime(const Poly& f, const Poly& g);

bool pairwiseShiftingPrime(const std::vector<Poly>& fs);

// Enumerates points of a divisor that may be infinite (arithmetic progressions
// of unit step), clipped to a closed disc.
class DivisorSource {
public:
    virtual ~DivisorSource() = default;
    virtual Divisor enumerate(const Rat& radius) const = 0;
    virtual bool finite() const = 0;
    virtual Rat coveringRadius() const = 0;  // throws for infinite sources
};

class FiniteSource final : public DivisorSource {
public:
    explicit FiniteSource(Divisor d) : all_(std::move(d)) {}
    Divisor enumerate(const Rat& radius) const override;
    bool finite() const override { return true; }
    Rat coveringRadius() const override { return all_.coveringRadius(); }
    const Divisor& all() const { return all_; }

private:
    Divisor all_;
};

class LatticeSource final : public DivisorSource {
public:
    enum class Extent { up, down, both };
    struct Run {
        GaussianRational anchor;
        Extent extent = Extent::both;
        int zmult = 0;
        int pmult = 0;
    };

    void addRun(Run r) { runs_.push_back(std::move(r)); }
    Divisor enumerate(const Rat& radius) const override;
    bool finite() const override { return false; }
    Rat coveringRadius() const override;
    const std::vector<Run>& runs() const { return runs_; }

private:
    std::vector<Run> runs_;
};

}  // namespace fallcalc
