#pragma once

#include <array>
#include <string>
#include <vector>

#include "fallcalc/theorems.hpp"

namespace fallcalc {

// Validity of fall(a,n) + fall(b,n) = fall(c,n) as an exact identity together
// with the admissibility gates (nonzero, not all constant, falling powers
// pairwise shifting prime).
MarginReport fermatCheck(const Poly& a, const Poly& b, const Poly& c, int n);

struct FermatSearchResult {
    int n = 0;
    int degMax = 0;
    int box = 0;
    long long pairsConsidered = 0;
    long long identityHits = 0;  // before admissibility filtering
    bool truncated = false;
    std::vector<std::array<Poly, 3>> instances;  // admissible, canonically sorted
};

// Exhaustive sweep over polynomials of degree <= degMax whose coefficients are
// Gaussian integers with |Re|, |Im| <= box. Pairs (a, b) are enumerated and
// fall(a,n) + fall(b,n) is probed against a hash table of falling powers; the
// only skips are blocks provably empty from leading coefficients. The shuffle
// seed permutes enumeration order without affecting the result set.
FermatSearchResult fermatSearch(int n, int degMax, int box, unsigned long long shuffleSeed = 0,
                                size_t maxInstances = 1000);

}  // namespace fallcalc
