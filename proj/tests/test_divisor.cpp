#include <doctest.h>

#include <algorithm>

#include "fallcalc/divisor.hpp"
#include "fallcalc/poly.hpp"
#include "fallcalc/roots.hpp"
#include "helpers.hpp"

using namespace fallcalc;

namespace {
GaussianRational g(long re, long im = 0) { return {Rat(re), Rat(im)}; }

std::vector<Chain> sortedChains(std::vector<Chain> cs) {
    std::sort(cs.begin(), cs.end());
    return cs;
}
}  // namespace

TEST_CASE("chains of z^2 (z-1)^3 (z-2)^4") {
    Divisor d;
    d.addZero(g(0), 2);
    d.addZero(g(1), 3);
    d.addZero(g(2), 4);
    auto cs = sortedChains(chainDecompose(d, Rat(4), PointKind::zero));
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == Chain{g(0), 3, PointKind::zero});
    CHECK(cs[1] == Chain{g(0), 3, PointKind::zero});
    CHECK(cs[2] == Chain{g(1), 2, PointKind::zero});
    CHECK(cs[3] == Chain{g(2), 1, PointKind::zero});
    for (int r = 4; r <= 40; r += 9) {
        CHECK(chainCountClosedForm(d, Rat(r), PointKind::zero) == 4);
        CHECK(chainDecompose(d, Rat(r), PointKind::zero).size() == 4);
    }
}

TEST_CASE("pole chains of 1/(z^2 (z+1)^4 (z+2)^3)") {
    Divisor d;
    d.addPole(g(0), 2);
    d.addPole(g(-1), 4);
    d.addPole(g(-2), 3);
    auto cs = sortedChains(chainDecompose(d, Rat(4), PointKind::pole));
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == Chain{g(-1), 1, PointKind::pole});
    CHECK(cs[1] == Chain{g(-1), 2, PointKind::pole});
    CHECK(cs[2] == Chain{g(0), 3, PointKind::pole});
    CHECK(cs[3] == Chain{g(0), 3, PointKind::pole});
    CHECK(chainCountClosedForm(d, Rat(4), PointKind::pole) == 4);
}

TEST_CASE("pole run lengths of 1/(z^2 (z+1) (z+2))") {
    Divisor d;
    d.addPole(g(0), 2);
    d.addPole(g(-1), 1);
    d.addPole(g(-2), 1);
    CHECK(lengthAt(d, Rat(5), g(0), PointKind::pole) == 3);
    CHECK(lengthAt(d, Rat(5), g(-1), PointKind::pole) == 2);
    CHECK(lengthAt(d, Rat(5), g(-2), PointKind::pole) == 1);
    CHECK(lengthAt(d, Rat(5), g(1), PointKind::pole) == 0);
    CHECK(lengthAt(d, Rat(5), g(0), PointKind::zero) == 0);
    // pole runs extend downward, zero runs upward
    Divisor z;
    z.addZero(g(0));
    z.addZero(g(1));
    CHECK(lengthAt(z, Rat(3), g(0), PointKind::zero) == 2);
    CHECK(lengthAt(z, Rat(3), g(1), PointKind::zero) == 1);
    // clipping at the disc boundary
    CHECK(lengthAt(z, Rat(0), g(0), PointKind::zero) == 1);
}

TEST_CASE("unit-mesh lattice counts one chain and no unclipped starts") {
    LatticeSource src;
    src.addRun({g(0), LatticeSource::Extent::both, 1, 0});
    for (int r : {1, 5, 20, 100}) {
        Divisor d = src.enumerate(Rat(r + 2));
        CHECK(chainCountClosedForm(d, Rat(r), PointKind::zero) == 1);
        CHECK(chainDecompose(d, Rat(r), PointKind::zero).size() == 1);
        CHECK(nTildeIKLT(d, Rat(r)) == 0);
    }
}

TEST_CASE("downward pole ray keeps one chain at every radius") {
    LatticeSource src;
    src.addRun({g(0), LatticeSource::Extent::down, 0, 1});
    for (int r : {1, 4, 10, 50}) {
        Divisor d = src.enumerate(Rat(r + 2));
        CHECK(chainCountClosedForm(d, Rat(r), PointKind::pole) == 1);
        CHECK(lengthAt(d, Rat(r), g(0), PointKind::pole) == r + 1);
    }
}

TEST_CASE("greedy decomposition matches the closed form on random divisors") {
    std::mt19937_64 rng(517);
    for (int t = 0; t < 150; ++t) {
        Divisor d = testgen::divisor(rng, 12, 6, 3);
        for (int rr = 0; rr < 8; ++rr) {
            Rat radius(testgen::pickInt(rng, 0, 9), testgen::pickInt(rng, 1, 2));
            auto greedy = chainDecompose(d, radius, PointKind::zero);
            CHECK((int)greedy.size() == chainCountClosedForm(d, radius, PointKind::zero));
            int total = 0;
            for (const auto& c : greedy) total += c.length;
            int mass = 0;
            for (const auto& p : d.points())
                if (p.zmult > 0 && p.at.normSq() <= radius * radius) mass += p.zmult;
            CHECK(total == mass);
        }
    }
}

TEST_CASE("greedy decomposition does not depend on the selection order") {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 40; ++t) {
        Divisor d = testgen::divisor(rng, 10, 5, 3);
        Rat radius = d.empty() ? Rat(3) : d.coveringRadius();
        auto base = sortedChains(chainDecompose(d, radius, PointKind::zero));
        for (int o = 0; o < 4; ++o) {
            std::mt19937_64 order(1000 * t + o);
            auto shuffled = sortedChains(chainDecompose(d, radius, PointKind::zero, 0.0, &order));
            CHECK(base == shuffled);
        }
    }
}

TEST_CASE("bulk construction agrees with repeated add") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 60; ++t) {
        std::vector<DivisorPoint> raw;
        Divisor byAdd;
        int n = testgen::pickInt(rng, 0, 25);
        for (int k = 0; k < n; ++k) {
            GaussianRational at(Rat(testgen::pickInt(rng, -3, 3), testgen::pickInt(rng, 1, 2)),
                                Rat(testgen::pickInt(rng, -2, 2)));
            int zm = testgen::pickInt(rng, 0, 2);
            int pm = zm ? 0 : testgen::pickInt(rng, 0, 2);
            if (testgen::pickInt(rng, 0, 3) == 0) std::swap(zm, pm);
            raw.push_back({at, zm, pm});
            byAdd.add(at, zm, pm);
        }
        Divisor bulk = Divisor::fromUnsorted(raw);
        REQUIRE(bulk.points().size() == byAdd.points().size());
        for (size_t i = 0; i < bulk.points().size(); ++i) {
            CHECK(bulk.points()[i].at == byAdd.points()[i].at);
            CHECK(bulk.points()[i].zmult == byAdd.points()[i].zmult);
            CHECK(bulk.points()[i].pmult == byAdd.points()[i].pmult);
        }
    }
}

TEST_CASE("opposite multiplicities at one point cancel") {
    Divisor d;
    d.addZero(g(1), 3);
    d.addPole(g(1), 1);
    REQUIRE(d.points().size() == 1);
    CHECK(d.points()[0].zmult == 2);
    CHECK(d.points()[0].pmult == 0);
    d.addPole(g(1), 2);
    CHECK(d.empty());
}

TEST_CASE("difference radical of the worked example") {
    Poly z = Poly::variable();
    Poly f = z * z * (z - Poly(1)).pow(3) * (z - Poly(2)).pow(4);
    FactoredPoly fp = exactRoots(f);
    FactoredPoly rad = differenceRadical(fp);
    CHECK(rad.expand() == z * z * (z - Poly(1)) * (z - Poly(2)));
    FactoredPoly classic = classicRadical(fp);
    CHECK(classic.expand() == z * (z - Poly(1)) * (z - Poly(2)));
    // radical degree equals the unclipped chain count
    Divisor d = Divisor::fromFactored(fp);
    CHECK(rad.expand().degree() == chainCountClosedForm(d, d.coveringRadius(), PointKind::zero));
}

TEST_CASE("difference radical degree equals chain count at covering radius") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 50; ++t) {
        FactoredPoly fp = testgen::plantedFactored(rng, 4, 3, 3);
        Divisor d = Divisor::fromFactored(fp);
        FactoredPoly rad = differenceRadical(fp);
        CHECK(rad.expand().degree() ==
              chainCountClosedForm(d, d.coveringRadius(), PointKind::zero));
    }
}

TEST_CASE("shifting-prime pairs and adjacency witnesses") {
    Poly z = Poly::variable();
    // z and z-1: zero of the first at 0, zero of the second at 1; gap one
    auto r = relativelyShiftingPrime(z, z - Poly(1));
    CHECK_FALSE(r.prime);
    REQUIRE(r.witness);
    CHECK(r.witness->second - r.witness->first == g(1));
    // common zero alone does not break primeness
    CHECK(relativelyShiftingPrime(z, z.scaled(g(2))).prime);
    CHECK(relativelyShiftingPrime(z * z + Poly(1), z * z - Poly(1)).prime);
    CHECK_FALSE(relativelyShiftingPrime(z * z + Poly(1), (z - Poly(1)).pow(2) + Poly(1)).prime);
    // irrational roots still detected: z^2-2 against its unit shift
    CHECK_FALSE(relativelyShiftingPrime(z * z - Poly(2), (z - Poly(1)) * (z - Poly(1)) - Poly(2)).prime);
    CHECK(pairwiseShiftingPrime({z * z + Poly(1), Poly(-2L), z * z - Poly(1)}));
}

TEST_CASE("divisor route and polynomial route agree on shifting primeness") {
    std::mt19937_64 rng(443);
    for (int t = 0; t < 80; ++t) {
        Poly f = testgen::plantedFactored(rng, 3, 4, 2).expand();
        Poly h = testgen::plantedFactored(rng, 3, 4, 2).expand();
        auto exact = relativelyShiftingPrime(f, h);
        Divisor df = Divisor::fromFactored(exactRoots(f));
        Divisor dh = Divisor::fromFactored(exactRoots(h));
        Rat radius = std::max(df.coveringRadius(), dh.coveringRadius()) + 2;
        auto viaDiv = relativelyShiftingPrime(df, dh, radius);
        CHECK(exact.prime == viaDiv.prime);
    }
}

TEST_CASE("falling factorials recombine across touching blocks") {
    // (z-a)(z-a-1)...(z-a-m+1) times the block starting at a+m continues the run,
    // so the pair is never shifting prime with itself shifted by the block length.
    Poly z = Poly::variable();
    Poly a = z.fallExpr(3);                 // z(z-1)(z-2)
    Poly b = (z - Poly(3)).fallExpr(2);     // (z-3)(z-4)
    auto r = relativelyShiftingPrime(a, b);
    CHECK_FALSE(r.prime);
    Divisor d = Divisor::fromFactored(exactRoots(a * b));
    CHECK(chainCountClosedForm(d, Rat(6), PointKind::zero) == 1);
    CHECK(lengthAt(d, Rat(6), g(0), PointKind::zero) == 5);
}

TEST_CASE("covering radius bounds every point") {
    Divisor d;
    d.addZero(GaussianRational(Rat(5), Rat(2)), 1);
    d.addPole(g(-3), 2);
    Rat r = d.coveringRadius(0);
    for (const auto& p : d.points()) CHECK(p.at.normSq() <= r * r);
    CHECK(d.coveringRadius(2) == r + 2);
    CHECK(Divisor().coveringRadius(0) == Rat(0));
}

TEST_CASE("chain neighbor table mirrors the closed form") {
    std::mt19937_64 rng(58);
    for (int t = 0; t < 60; ++t) {
        Divisor d = testgen::divisor(rng, 10, 5, 3);
        for (int r = 0; r <= 7; ++r) {
            Rat radius(r);
            Rat rsq = radius * radius;
            int viaTable = 0;
            for (const auto& e : chainNeighborTable(d, PointKind::zero)) {
                if (e.wSq > rsq) continue;
                int shared = e.predMult > 0 && e.predSq <= rsq ? std::min(e.mult, e.predMult) : 0;
                viaTable += e.mult - shared;
            }
            CHECK(viaTable == chainCountClosedForm(d, radius, PointKind::zero));
        }
    }
}
