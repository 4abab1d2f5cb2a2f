#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fallcalc/poly.hpp"
#include "fallcalc/tolerance.hpp"

namespace fallcalc {

struct ExactFactorizationIncomplete : std::runtime_error {
    explicit ExactFactorizationIncomplete(const std::string& what) : std::runtime_error(what) {}
};

struct NumericalNonConvergence : std::runtime_error {
    explicit NumericalNonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// lead * prod (z - root)^mult with exact roots, sorted lexicographically.
struct FactoredPoly {
    GaussianRational lead{1};
    std::vector<std::pair<GaussianRational, int>> roots;

    Poly expand() const;
    int totalMultiplicity() const;
    std::string str(const std::string& var = "z") const;
};

struct NumericRoot {
    std::complex<double> at;
    int mult = 1;
};

// Complete factorization over Q(i). Throws ExactFactorizationIncomplete when a
// factor without Gaussian-rational roots remains.
FactoredPoly exactRoots(const Poly& p);

// Aberth-Ehrlich iteration; clusters within root_eps and reports multiplicities.
std::vector<NumericRoot> numericRoots(const Poly& p, const TolerancePolicy& tol = {});

// Best rational approximation with bounded denominator (continued fractions).
Rat rationalize(double x, long long denBound = 1000000);

}  // namespace fallcalc
