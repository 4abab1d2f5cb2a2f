#include <doctest.h>

#include <cmath>

#include "fallcalc/nevanlinna.hpp"
#include "helpers.hpp"

using namespace fallcalc;

namespace {
GaussianRational g(long re, long im = 0) { return {Rat(re), Rat(im)}; }
Poly Z() { return Poly::variable(); }
}  // namespace

TEST_CASE("circle means reproduce Jensen values") {
    Quadrature q;
    // mean of log |r e^{i t} - a| is log max(r, |a|)
    auto mean = [&](double r, std::complex<double> a) {
        return circleMean([&](double t) { return std::log(std::abs(std::polar(r, t) - a)); }, q);
    };
    CHECK(mean(2.0, {0.5, 0.0}) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(mean(2.0, {0.0, 5.0}) == doctest::Approx(std::log(5.0)).epsilon(1e-9));
    CHECK(mean(1.0, {3.0, 4.0}) == doctest::Approx(std::log(5.0)).epsilon(1e-9));
    CHECK(circleMean([](double) { return 7.5; }, q) == doctest::Approx(7.5));
}

TEST_CASE("singular nodes are nudged instead of poisoning the mean") {
    Quadrature q;
    // integrand blows up exactly at theta = 0, a quadrature node
    double r = 2.0;
    std::complex<double> a(2.0, 0.0);
    double got = circleMean(
        [&](double t) { return std::log(std::abs(std::polar(r, t) - a)); }, q);
    CHECK(std::isfinite(got));
    CHECK(got == doctest::Approx(std::log(2.0)).epsilon(0.01));
}

TEST_CASE("log abs sin pi z stays finite far from the axis") {
    // |sin(pi z)| ~ e^{pi |y|}/2 for large |y|
    for (double y : {50.0, 500.0, 5000.0}) {
        double v = logAbsSinPi({0.25, y});
        CHECK(v == doctest::Approx(3.14159265358979 * y - std::log(2.0)).epsilon(1e-9));
    }
    CHECK(logAbsSinPi({0.5, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("characteristic of a polynomial grows like its degree") {
    Quadrature q;
    Characteristic T(RationalFunction::fromPoly(Z() * Z() * Z() - Poly(2)));
    for (double r : {10.0, 100.0}) {
        CHECK(T.N(r) == 0.0);
        CHECK(T.T(r, q) == doctest::Approx(3 * std::log(r)).epsilon(1e-4));
    }
}

TEST_CASE("characteristic splits into proximity and pole counting") {
    Quadrature q;
    RationalFunction f(Poly(g(1)), Z() * (Z() - Poly(1)));
    Characteristic T(f);
    double r = 100.0;
    // both poles inside: N = 2 log r - log 1, m -> 0
    CHECK(T.N(r) == doctest::Approx(2 * std::log(r) - std::log(1.0)).epsilon(1e-9));
    CHECK(T.m(r, q) == doctest::Approx(0.0).epsilon(1e-3));
    CHECK(T.T(r, q) == doctest::Approx(2 * std::log(r)).epsilon(1e-2));
}

TEST_CASE("first main theorem residual is quadrature-small both ways") {
    Quadrature q;
    std::mt19937_64 rng(662);
    for (int t = 0; t < 8; ++t) {
        Poly num = testgen::poly(rng, 3, 3);
        Poly den = testgen::nonconstantPoly(rng, 3, 3);
        if (num.isZero()) continue;
        RationalFunction f(num, den);
        if (f.isConstant()) continue;
        Characteristic Tf(f);
        Characteristic Tinv(f.pow(-1));
        // T(r, f) - T(r, 1/f) is the log magnitude of the lowest Laurent
        // coefficient of f at the origin, independent of r
        int k = 0;
        while (f.num().coeff(k).isZero()) ++k;
        int j = 0;
        while (f.den().coeff(j).isZero()) ++j;
        double logc = std::log(std::abs(f.num().coeff(k).toComplex())) -
                      std::log(std::abs(f.den().coeff(j).toComplex()));
        for (double r : {10.0, 100.0}) {
            double lhs = Tf.T(r, q) - Tinv.T(r, q);
            CHECK(std::abs(lhs - logc) < 0.02);
        }
    }
}

TEST_CASE("tuple characteristic of two polynomials") {
    Quadrature q;
    // (1, z): mean log max(1, |z|) = log r for r >= 1, lowest coeffs 1 and 1
    std::vector<TupleEntry> e{TupleEntry::fromPoly(Poly(g(1))), TupleEntry::fromPoly(Z())};
    for (double r : {2.0, 10.0, 100.0})
        CHECK(tildeT(e, r, q) == doctest::Approx(std::log(r)).epsilon(1e-6));
    // scaling one entry shifts both the mean and the correction
    std::vector<TupleEntry> s{TupleEntry::fromPoly(Poly(g(3))), TupleEntry::fromPoly(Z())};
    double r = 10.0;
    CHECK(tildeT(s, r, q) == doctest::Approx(std::log(r) - std::log(3.0)).epsilon(1e-6));
}

TEST_CASE("tuple characteristic needs at least two entries") {
    Quadrature q;
    CHECK_THROWS(tildeT({TupleEntry::fromPoly(Z())}, 10.0, q));
}

TEST_CASE("lemma on the tuple characteristic leaves a flat residual") {
    Quadrature q;
    std::mt19937_64 rng(5150);
    int done = 0;
    std::vector<double> grid{8.0, 40.0, 200.0, 1000.0};
    for (int t = 0; t < 20 && done < 6; ++t) {
        Poly a = testgen::poly(rng, 3, 2);
        Poly b = testgen::nonconstantPoly(rng, 3, 2);
        if (a.isZero()) continue;
        auto rep = lemmaTCheck(a, b, grid, q);
        CHECK(rep.spread < 1e-3);
        ++done;
    }
    CHECK(done >= 3);
    // the common-zero correction is what keeps the residual flat
    Poly z = Z();
    auto shared = lemmaTCheck(z * (z - Poly(2)), z * (z - Poly(3)), grid, q);
    CHECK(shared.spread < 1e-3);
}
