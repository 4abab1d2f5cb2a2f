#include <doctest.h>

#include "fallcalc/poly.hpp"
#include "helpers.hpp"

using namespace fallcalc;

namespace {
Poly Z() { return Poly::variable(); }
GaussianRational g(long re, long im = 0) { return {Rat(re), Rat(im)}; }
}  // namespace

TEST_CASE("arithmetic and evaluation") {
    Poly p = Z() * Z() - Z();  // z^2 - z
    CHECK(p.degree() == 2);
    CHECK(p.eval(g(3)) == g(6));
    CHECK(p.eval(GaussianRational(Rat(1, 2))) == GaussianRational(Rat(-1, 4)));
    CHECK((p - p).isZero());
    CHECK((p - p).degree() == -1);
    CHECK(p.pow(0) == Poly(g(1)));
    CHECK(p.pow(2) == p * p);
    CHECK(p.str() == "z^2 - z");
    Poly q = Poly::fromCoeffs({g(0, 1), g(-2)});  // -2z + i
    CHECK(q.str() == "-2*z + i");
    CHECK(q.eval(g(0, 1)) == g(0, -1));  // -2i + i
}

TEST_CASE("shift matches a hand binomial expansion") {
    // (z+2)^3 = z^3 + 6z^2 + 12z + 8
    Poly cube = Z() * Z() * Z();
    Poly shifted = cube.shifted(g(2));
    CHECK(shifted == Poly::fromCoeffs({g(8), g(12), g(6), g(1)}));
    // shifting is a group action
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Poly p = testgen::poly(rng, 5, 4);
        GaussianRational a = testgen::gauss(rng, 3), b = testgen::gauss(rng, 3);
        CHECK(p.shifted(a).shifted(b) == p.shifted(a + b));
        CHECK(p.shifted(a).eval(g(0)) == p.eval(a));
    }
}

TEST_CASE("forward differences") {
    Poly sq = Z() * Z();
    CHECK(sq.delta() == Poly::fromCoeffs({g(1), g(2)}));  // 2z + 1
    CHECK(sq.delta(2) == Poly(g(2)));
    CHECK(sq.delta(3).isZero());
    CHECK(Poly(g(7)).delta().isZero());
    // delta drops the degree by exactly one and scales the lead by deg
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        Poly p = testgen::nonconstantPoly(rng, 6, 5);
        Poly d = p.delta();
        CHECK(d.degree() == p.degree() - 1);
        CHECK(d.leading() == p.leading() * g(p.degree()));
    }
}

TEST_CASE("falling powers and their zeros") {
    Poly f3 = Poly::fallingPower(3);
    CHECK(f3 == Z() * (Z() - Poly(g(1))) * (Z() - Poly(g(2))));
    CHECK(f3.eval(g(5)) == g(60));
    CHECK(f3.eval(g(1)).isZero());
    Poly shifted = Poly::fallingPower(g(0, 1), 2);  // zeros i, 1+i
    CHECK(shifted.eval(g(0, 1)).isZero());
    CHECK(shifted.eval(g(1, 1)).isZero());
    CHECK_FALSE(shifted.eval(g(2, 1)).isZero());
    // delta of a falling power: n times the next lower one
    for (int n = 1; n <= 5; ++n)
        CHECK(Poly::fallingPower(n).delta() == Poly::fallingPower(n - 1).scaled(g(n)));
}

TEST_CASE("newton basis: z^3 decomposes with Stirling weights") {
    Poly cube = Z() * Z() * Z();
    std::vector<GaussianRational> n = cube.toNewton();
    // z^3 = z^(3 falling) + 3 z^(2 falling) + z^(1 falling)
    REQUIRE(n.size() == 4);
    CHECK(n[0] == g(0));
    CHECK(n[1] == g(1));
    CHECK(n[2] == g(3));
    CHECK(n[3] == g(1));
    CHECK(Poly::fromNewton(n) == cube);
}

TEST_CASE("newton basis round trips") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        Poly p = testgen::poly(rng, 7, 6);
        CHECK(Poly::fromNewton(p.toNewton()) == p);
    }
    // and the other direction, from random newton coefficients
    for (int t = 0; t < 40; ++t) {
        std::vector<GaussianRational> n;
        int len = static_cast<int>(testgen::pickInt(rng, 1, 6));
        for (int k = 0; k < len; ++k) n.push_back(testgen::gauss(rng, 5));
        Poly p = Poly::fromNewton(n);
        std::vector<GaussianRational> back = p.toNewton();
        back.resize(n.size());
        CHECK(back == n);
    }
}

TEST_CASE("falling products compose under shifts") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 25; ++t) {
        Poly p = testgen::poly(rng, 3, 3);
        if (p.isZero()) continue;
        int m = static_cast<int>(testgen::pickInt(rng, 0, 3));
        int n = static_cast<int>(testgen::pickInt(rng, 0, 3));
        CHECK(p.fallExpr(m + n) == p.fallExpr(m) * p.shifted(g(-m)).fallExpr(n));
    }
    CHECK(Z().fallExpr(3) == Poly::fallingPower(3));
}

TEST_CASE("division and gcd") {
    Poly a = (Z() - Poly(g(1))).pow(2) * (Z() + Poly(g(2)));
    Poly b = (Z() - Poly(g(1))) * (Z() + Poly(g(3)));
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(a, b) == Z() - Poly(g(1)));
    CHECK(gcd(Z() * (Z() - Poly(g(1))), (Z() - Poly(g(2))) * (Z() - Poly(g(3)))) == Poly(g(1)));
    CHECK(gcd(Poly(), Poly()).isZero());
    CHECK(divides(Z() - Poly(g(1)), a));
    CHECK_FALSE(divides(Z() - Poly(g(5)), a));
    // gcd is monic regardless of input scaling
    std::mt19937_64 rng(15);
    for (int t = 0; t < 25; ++t) {
        Poly x = testgen::poly(rng, 4, 3), y = testgen::poly(rng, 4, 3);
        if (x.isZero() || y.isZero()) continue;
        Poly gxy = gcd(x, y);
        CHECK(gcd(x.scaled(g(3, 1)), y.scaled(g(-2))) == gxy);
        if (!gxy.isConstant()) {
            CHECK(divides(gxy, x));
            CHECK(divides(gxy, y));
        }
    }
}

TEST_CASE("root multiplicity by exact deflation") {
    Poly p = Z() * Z() * (Z() - Poly(g(1))).pow(3);
    CHECK(rootMultiplicity(p, g(0)) == 2);
    CHECK(rootMultiplicity(p, g(1)) == 3);
    CHECK(rootMultiplicity(p, g(2)) == 0);
    CHECK(rootMultiplicity(Poly::fallingPower(g(0, 1), 2), g(1, 1)) == 1);
}
