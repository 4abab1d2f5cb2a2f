#include <doctest.h>

#include <algorithm>
#include <complex>

#include "fallcalc/roots.hpp"
#include "helpers.hpp"

using namespace fallcalc;

namespace {
Poly Z() { return Poly::variable(); }
GaussianRational g(long re, long im = 0) { return {Rat(re), Rat(im)}; }
}  // namespace

TEST_CASE("exact factorization of the worked example") {
    Poly p = Z().pow(2) * (Z() - Poly(g(1))).pow(3) * (Z() - Poly(g(2))).pow(4);
    FactoredPoly f = exactRoots(p);
    REQUIRE(f.roots.size() == 3);
    CHECK(f.lead == g(1));
    CHECK(f.roots[0] == std::make_pair(g(0), 2));
    CHECK(f.roots[1] == std::make_pair(g(1), 3));
    CHECK(f.roots[2] == std::make_pair(g(2), 4));
    CHECK(f.totalMultiplicity() == 9);
    CHECK(f.expand() == p);
    CHECK(f.str() == "z^2*(z-1)^3*(z-2)^4");
}

TEST_CASE("gaussian and fractional roots come out exact") {
    Poly p = (Z() - Poly(g(0, 1))) * (Z() + Poly(g(0, 1)));  // z^2 + 1
    FactoredPoly f = exactRoots(p);
    REQUIRE(f.roots.size() == 2);
    CHECK(f.roots[0].first == g(0, -1));
    CHECK(f.roots[1].first == g(0, 1));

    Poly q = Poly::fromCoeffs({g(-1), g(2)});  // 2z - 1
    FactoredPoly fq = exactRoots(q);
    REQUIRE(fq.roots.size() == 1);
    CHECK(fq.roots[0].first == GaussianRational(Rat(1, 2)));
    CHECK(fq.lead == g(2));
    CHECK(fq.expand() == q);
}

TEST_CASE("irrational roots raise and the numeric path takes over") {
    Poly p = Z() * Z() - Poly(g(2));  // z^2 - 2
    CHECK_THROWS_AS(exactRoots(p), ExactFactorizationIncomplete);
    auto roots = numericRoots(p);
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(),
              [](const NumericRoot& a, const NumericRoot& b) { return a.at.real() < b.at.real(); });
    CHECK(roots[0].at.real() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-9));
    CHECK(roots[1].at.real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(roots[0].mult == 1);
}

TEST_CASE("numeric clustering recovers multiplicity") {
    Poly p = (Z() - Poly(g(1))).pow(3);
    auto roots = numericRoots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].mult == 3);
    CHECK(std::abs(roots[0].at - std::complex<double>(1.0, 0.0)) < 1e-4);
}

TEST_CASE("random factored forms round trip exactly") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 25; ++t) {
        // build from known small rational roots, then recover them
        Poly p(testgen::nonzeroGauss(rng, 3));
        std::vector<std::pair<GaussianRational, int>> planted;
        int nroots = static_cast<int>(testgen::pickInt(rng, 1, 3));
        for (int k = 0; k < nroots; ++k) {
            Rat den(testgen::pickInt(rng, 0, 1) == 0 ? 1 : 2);
            GaussianRational at{Rat(testgen::pickInt(rng, -3, 3)) / den,
                                Rat(testgen::pickInt(rng, -3, 3)) / den};
            int mult = static_cast<int>(testgen::pickInt(rng, 1, 3));
            bool dup = false;
            for (auto& [r, m] : planted)
                if (r == at) {
                    m += mult;
                    dup = true;
                }
            if (!dup) planted.emplace_back(at, mult);
            for (int j = 0; j < mult; ++j) p = p * (Z() - Poly(at));
        }
        FactoredPoly f = exactRoots(p);
        CHECK(f.expand() == p);
        std::sort(planted.begin(), planted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        REQUIRE(f.roots.size() == planted.size());
        for (size_t k = 0; k < planted.size(); ++k) {
            CHECK(f.roots[k].first == planted[k].first);
            CHECK(f.roots[k].second == planted[k].second);
        }
    }
}

TEST_CASE("rationalize by continued fractions") {
    CHECK(rationalize(0.5) == Rat(1, 2));
    CHECK(rationalize(-2.0) == Rat(-2));
    CHECK(rationalize(1.0 / 3.0) == Rat(1, 3));
    CHECK(rationalize(22.0 / 7.0) == Rat(22, 7));
    // stays within the denominator bound
    Rat pi = rationalize(3.14159265358979, 200);
    CHECK(pi == Rat(355, 113));
    CHECK(rationalize(3.14159265358979, 100) == Rat(22, 7));
}
