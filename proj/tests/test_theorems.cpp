#include <doctest.h>

#include <cmath>

#include "fallcalc/theorems.hpp"
#include "helpers.hpp"

using namespace fallcalc;

namespace {
GaussianRational g(long re, long im = 0) { return {Rat(re), Rat(im)}; }
Poly Z() { return Poly::variable(); }
}  // namespace

TEST_CASE("margin classification needs two decades of bad radii") {
    double at = 0.0;
    CHECK(classifyMargins({10, 100, 1000}, {1.0, 2.0, 3.0}, 0.05, &at) == Verdict::holds);
    CHECK(classifyMargins({10, 100, 1000}, {1.0, -0.01, 3.0}, 0.05, &at) == Verdict::holds);
    // one decade of violation is inconclusive
    CHECK(classifyMargins({10, 20}, {-1.0, -1.0}, 0.05, &at) == Verdict::inconclusive);
    CHECK(classifyMargins({10, 100}, {-1.0, -1.0}, 0.05, &at) == Verdict::violated);
    CHECK(at == 10.0);
    CHECK(classifyMargins({10, 100, 1000}, {1.0, -1.0, -1.0}, 0.05, &at) == Verdict::violated);
    CHECK(at == 100.0);
    // tolerance absorbs small negatives
    CHECK(classifyMargins({10, 100}, {-0.04, -0.04}, 0.05, &at) == Verdict::holds);
}

TEST_CASE("degree-form abc on the curated triple") {
    // z^2+1 and z^2-1 differ by the constant 2; four chains against degree two
    MarginReport r = verifyPolyAbc(Z() * Z() + Poly(1), Poly(-2L), Z() * Z() - Poly(1));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.preconditionsPassed());
    REQUIRE(r.lhs.size() == 1);
    CHECK(r.lhs[0] == 2.0);   // max degree
    CHECK(r.rhs[0] == 3.0);   // chain count minus one
    CHECK(r.margin[0] == 1.0);
}

TEST_CASE("degree-form abc preconditions") {
    // identity failure
    MarginReport bad = verifyPolyAbc(Z(), Poly(1), Z());
    CHECK(bad.verdict == Verdict::preconditionFailed);
    // shifting-prime failure carries a witness
    MarginReport adj = verifyPolyAbc(Z(), Z() - Poly(1), Z().scaled(g(2)) - Poly(1));
    CHECK(adj.verdict == Verdict::preconditionFailed);
    bool sawWitness = false;
    for (const auto& p : adj.preconditions)
        if (!p.passed && !p.witness.empty()) sawWitness = true;
    CHECK(sawWitness);
    // all-constant triples are rejected
    CHECK(verifyPolyAbc(Poly(1), Poly(1), Poly(2)).verdict == Verdict::preconditionFailed);
    // zero entry rejected
    CHECK(verifyPolyAbc(Z(), Poly(), Z()).verdict == Verdict::preconditionFailed);
}

TEST_CASE("degree-form abc holds over random admissible triples") {
    std::mt19937_64 rng(412);
    int done = 0;
    for (int t = 0; t < 400 && done < 60; ++t) {
        Poly a = testgen::poly(rng, 3, 2);
        Poly b = testgen::poly(rng, 3, 2);
        if (a.isZero() || b.isZero()) continue;
        Poly c = a + b;
        if (c.isZero()) continue;
        MarginReport r = verifyPolyAbc(a, b, c);
        if (r.verdict == Verdict::preconditionFailed) continue;
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.margin[0] >= 0.0);
        ++done;
    }
    CHECK(done >= 30);
}

TEST_CASE("characteristic-form abc on the curated triple") {
    Quadrature q;
    MarginReport r = verifyEntireAbc(Z() * Z() + Poly(1), Poly(-2L), Z() * Z() - Poly(1),
                                     {10.0, 100.0, 1000.0}, q, 0.1);
    CHECK(r.verdict == Verdict::holds);
    for (double m : r.margin) CHECK(m > -r.tolerance);
}

TEST_CASE("lattice sine configuration defeats the plain truncated count") {
    Quadrature q;
    q.nodes = 512;
    MarginReport r = latticeSineCounterexample({100.0, 1000.0}, q);
    CHECK(r.preconditionsPassed());
    CHECK(r.verdict == Verdict::violated);
    REQUIRE(r.margin.size() == 2);
    CHECK(r.margin[0] < 0.0);
    CHECK(r.margin[1] < 5.0 * r.margin[0]);  // deficit grows at least linearly
    CHECK(r.violatedAt == 100.0);
}

TEST_CASE("m-term sum on an admissible quadruple") {
    Quadrature q;
    // z + (z^2 - 2) + (2 - z) = z^2: shift the last to break adjacency
    std::vector<Poly> fs{Z(), Z() * Z() - Poly(2), -Z() + Poly(2), Z() * Z()};
    MarginReport r = verifyMTerm(fs, {100.0, 1000.0}, q, 0.1);
    CHECK(r.preconditionsPassed());
    CHECK(r.verdict == Verdict::holds);
}

TEST_CASE("m-term preconditions catch dependent tuples") {
    Quadrature q;
    // 2, z^2, 3z^2 are linearly dependent: the casorati check fires without
    // any shifting-prime failure masking it
    std::vector<Poly> fs{Poly(2), Z() * Z(), (Z() * Z()).scaled(g(3)),
                         (Z() * Z()).scaled(g(4)) + Poly(2)};
    MarginReport r = verifyMTerm(fs, {100.0}, q, 0.1);
    CHECK(r.verdict == Verdict::preconditionFailed);
    for (const auto& p : r.preconditions)
        if (p.name == "casorati nonvanishing") CHECK_FALSE(p.passed);
    // too few functions
    CHECK(verifyMTerm({Z(), Z()}, {100.0}, q, 0.1).verdict == Verdict::preconditionFailed);
}

TEST_CASE("slope margins for inverse falling factorials") {
    Quadrature q;
    for (int m = 1; m <= 3; ++m) {
        RationalFunction f(Poly(g(1)), Z().fallExpr(m));
        SlopeData s;
        MarginReport r = smtReport(f, {g(1), g(2)}, q, {}, &s);
        CHECK(r.verdict == Verdict::holds);
        CHECK(s.exactRhsSlope - s.exactLhsSlope == 1 + m);
        CHECK(std::abs(s.fdLhsSlope - s.exactLhsSlope) < 0.02);
        CHECK(std::abs(s.fdRhsSlope - s.exactRhsSlope) < 0.02);
    }
}

TEST_CASE("complete long values of the falling square") {
    RationalFunction f = RationalFunction::fromPoly(Z().fallExpr(2));
    auto candidates = longValueCandidates(f);
    auto rep = completeLongValues(f, candidates);
    auto found = rep.reported();
    REQUIRE(found.size() == 1);
    REQUIRE(found[0].value.has_value());
    CHECK(*found[0].value == g(0));
    REQUIRE(found[0].chainLengths.size() == 1);
    CHECK(found[0].chainLengths[0] == 2);
}

TEST_CASE("a short chain component disqualifies a long value") {
    // delta(z^3 - 7z) = 3(z-1)(z+2); both critical values give a length-1 chain
    RationalFunction f = RationalFunction::fromPoly(Z().pow(3) - Z().scaled(g(7)));
    auto candidates = longValueCandidates(f);
    CHECK(candidates.size() == 2);
    auto rep = completeLongValues(f, candidates);
    CHECK(rep.reported().empty());
    for (const auto& v : rep.perValue) {
        if (!v.value) continue;
        CHECK_FALSE(v.complete);
        CHECK(v.chainLengths.size() == 2);
    }
}

TEST_CASE("infinity is a complete long value of inverse falling powers") {
    RationalFunction f(Poly(g(1)), Z().fallExpr(3));
    auto rep = completeLongValues(f, longValueCandidates(f));
    bool foundInf = false;
    for (const auto& v : rep.reported())
        if (!v.value) {
            foundInf = true;
            REQUIRE(v.chainLengths.size() == 1);
            CHECK(v.chainLengths[0] == 3);
        }
    CHECK(foundInf);
}

TEST_CASE("shifting share compares chain-start multisets") {
    // f and its unit shift share the value 0 with shifted starts, not equal ones
    RationalFunction f = RationalFunction::fromPoly(Z().fallExpr(2));
    ShareReport same = shiftingShare(f, f, g(0), Rat(6));
    CHECK(same.shared);
    RationalFunction h = RationalFunction::fromPoly((Z() - Poly(3)).fallExpr(2));
    ShareReport diff = shiftingShare(f, h, g(0), Rat(6));
    CHECK_FALSE(diff.shared);
    CHECK(same.startsF == same.startsG);
    // chain lengths do not matter, only the start multiset
    RationalFunction f3 = RationalFunction::fromPoly(Z().fallExpr(3));
    CHECK(shiftingShare(f, f3, g(0), Rat(6)).shared);
    // a doubled divisor splits into two chains and stops sharing
    RationalFunction fsq = RationalFunction::fromPoly(Z().fallExpr(2) * Z().fallExpr(2));
    CHECK_FALSE(shiftingShare(f, fsq, g(0), Rat(6)).shared);
}

TEST_CASE("five shared values force equality or flag a violation") {
    RationalFunction f = RationalFunction::fromPoly(Z() * Z());
    std::vector<std::optional<GaussianRational>> vals{g(0), g(1), g(4), g(9), std::nullopt};
    FiveValueReport eq = fiveValueCheck(f, f, vals);
    CHECK(eq.allShared);
    CHECK(eq.functionsEqual);
    CHECK(eq.verdict == Verdict::holds);

    RationalFunction h = RationalFunction::fromPoly(Z() * Z() + Poly(1));
    FiveValueReport ne = fiveValueCheck(f, h, vals);
    CHECK_FALSE(ne.allShared);
    CHECK(ne.verdict == Verdict::holds);
}

TEST_CASE("margin reports serialize") {
    MarginReport r = verifyPolyAbc(Z() * Z() + Poly(1), Poly(-2L), Z() * Z() - Poly(1));
    auto j = r.toJson();
    CHECK(j["theorem"] == "difference-abc-polynomial");
    CHECK(j["verdict"] == "holds");
    CHECK(j["margin"][0] == 1.0);
    CHECK(j["preconditions"].is_array());
}
