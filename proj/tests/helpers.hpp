#pragma once

// Deterministic generators shared by the test files. Everything is seeded
// explicitly so failures reproduce.

#include <map>
#include <random>

#include "fallcalc/divisor.hpp"
#include "fallcalc/poly.hpp"
#include "fallcalc/roots.hpp"

namespace testgen {

using fallcalc::Divisor;
using fallcalc::FactoredPoly;
using fallcalc::GaussianRational;
using fallcalc::Poly;
using fallcalc::Rat;

inline long pickInt(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

inline GaussianRational gauss(std::mt19937_64& rng, int box) {
    return {Rat(pickInt(rng, -box, box)), Rat(pickInt(rng, -box, box))};
}

inline GaussianRational nonzeroGauss(std::mt19937_64& rng, int box) {
    for (;;) {
        GaussianRational g = gauss(rng, box);
        if (!g.isZero()) return g;
    }
}

inline Poly poly(std::mt19937_64& rng, int maxDeg, int box) {
    int deg = static_cast<int>(pickInt(rng, 0, maxDeg));
    std::vector<GaussianRational> c(static_cast<size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c[static_cast<size_t>(k)] = gauss(rng, box);
    c[static_cast<size_t>(deg)] = nonzeroGauss(rng, box);
    return Poly::fromCoeffs(std::move(c));
}

inline Poly nonconstantPoly(std::mt19937_64& rng, int maxDeg, int box) {
    for (;;) {
        Poly p = poly(rng, maxDeg, box);
        if (p.degree() >= 1) return p;
    }
}

// Points on a small grid with occasional unit neighbors, so chains of every
// shape show up; denominators 1 or 2 exercise non-integer alignment.
inline Divisor divisor(std::mt19937_64& rng, int points, int box, int maxMult) {
    Divisor d;
    GaussianRational last;
    bool haveLast = false;
    for (int k = 0; k < points; ++k) {
        GaussianRational at;
        if (haveLast && pickInt(rng, 0, 2) == 0) {
            at = last + GaussianRational(1);  // force a unit successor
        } else {
            Rat den(pickInt(rng, 0, 1) == 0 ? 1 : 2);
            at = {Rat(pickInt(rng, -box, box)) / den, Rat(pickInt(rng, -box, box)) / den};
        }
        d.addZero(at, static_cast<int>(pickInt(rng, 1, maxMult)));
        last = at;
        haveLast = true;
    }
    return d;
}

// Factored form with planted Gaussian-rational roots; duplicates merge so the
// result is a valid sorted factorization.
inline FactoredPoly plantedFactored(std::mt19937_64& rng, int nRoots, int box, int maxMult) {
    std::map<GaussianRational, int> mults;
    int n = static_cast<int>(pickInt(rng, 1, nRoots));
    for (int k = 0; k < n; ++k) {
        Rat den(pickInt(rng, 0, 1) == 0 ? 1 : 2);
        GaussianRational at{Rat(pickInt(rng, -box, box)) / den, Rat(pickInt(rng, -box, box)) / den};
        mults[at] += static_cast<int>(pickInt(rng, 1, maxMult));
    }
    FactoredPoly fp;
    fp.lead = nonzeroGauss(rng, box);
    for (const auto& [at, m] : mults) fp.roots.emplace_back(at, m);
    return fp;
}

}  // namespace testgen
