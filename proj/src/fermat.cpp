#include "fallcalc/fermat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace fallcalc {

MarginReport fermatCheck(const Poly& a, const Poly& b, const Poly& c, int n) {
    MarginReport rep;
    rep.theorem = "falling-power-fermat";
    rep.inputs = {a.str(), b.str(), c.str(), "n=" + std::to_string(n)};
    bool expOk = n >= 1;
    rep.preconditions.push_back({"exponent n >= 1", expOk, expOk ? "" : "n = " + std::to_string(n)});
    bool nonzero = !a.isZero() && !b.isZero() && !c.isZero();
    rep.preconditions.push_back({"nonzero", nonzero, nonzero ? "" : "a zero polynomial entered"});
    bool notAllConst = !(a.isConstant() && b.isConstant() && c.isConstant());
    rep.preconditions.push_back({"not all constant", notAllConst, notAllConst ? "" : "all three constant"});
    bool primeAll = false;
    std::string witness;
    if (expOk && nonzero) {
        primeAll = true;
        Poly fa = a.fallExpr(n), fb = b.fallExpr(n), fc = c.fallExpr(n);
        const Poly* fs[3] = {&fa, &fb, &fc};
        const char* names[3] = {"fall(a)", "fall(b)", "fall(c)"};
        for (int i = 0; i < 3 && primeAll; ++i)
            for (int j = i + 1; j < 3 && primeAll; ++j) {
                auto r = relativelyShiftingPrime(*fs[i], *fs[j]);
                if (!r.prime) {
                    primeAll = false;
                    witness = std::string(names[i]) + "," + names[j];
                    if (r.witness)
                        witness += ": zeros at " + r.witness->first.str() + " and " +
                                   r.witness->second.str();
                }
            }
    }
    rep.preconditions.push_back({"falling powers pairwise shifting prime", primeAll, witness});
    if (!rep.preconditionsPassed()) {
        rep.verdict = Verdict::preconditionFailed;
        return rep;
    }
    bool identity = (a.fallExpr(n) + b.fallExpr(n)) == c.fallExpr(n);
    rep.verdict = identity ? Verdict::holds : Verdict::violated;
    rep.note = identity ? "exact identity fall(a,n) + fall(b,n) = fall(c,n) confirmed"
                        : "fall(a,n) + fall(b,n) differs from fall(c,n)";
    return rep;
}

namespace {

using G = std::array<long long, 2>;  // gaussian integer, re/im
using Coeffs = std::vector<G>;       // lowest first, trimmed

G mulG(G x, G y) { return {x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]}; }
G addG(G x, G y) { return {x[0] + y[0], x[1] + y[1]}; }

G powG(G x, int n) {
    G r{1, 0};
    for (int k = 0; k < n; ++k) r = mulG(r, x);
    return r;
}

void trim(Coeffs& c) {
    while (!c.empty() && c.back()[0] == 0 && c.back()[1] == 0) c.pop_back();
}

// p(z - k) via the binomial expansion of each power
Coeffs shiftDown(const Coeffs& p, long long k, const std::vector<std::vector<long long>>& binom) {
    Coeffs out(p.size(), G{0, 0});
    for (size_t j = 0; j < p.size(); ++j) {
        long long sign = 1, kp = 1;
        for (size_t i = j + 1; i-- > 0;) {
            // contribution of c_j * C(j,i) * (-k)^(j-i) to z^i; iterate i downward
            long long w = binom[j][i] * sign * kp;
            out[i] = addG(out[i], {p[j][0] * w, p[j][1] * w});
            sign = -sign;
            kp *= k;
        }
    }
    trim(out);
    return out;
}

Coeffs convolve(const Coeffs& x, const Coeffs& y) {
    double bx = 0, by = 0;
    for (auto g : x) bx = std::max(bx, std::hypot(double(g[0]), double(g[1])));
    for (auto g : y) by = std::max(by, std::hypot(double(g[0]), double(g[1])));
    double bound = double(std::min(x.size(), y.size())) * bx * by * 2.0;
    if (bound > 2e18) throw std::overflow_error("falling-power search box too large for the fast path");
    Coeffs out(x.empty() || y.empty() ? 0 : x.size() + y.size() - 1, G{0, 0});
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) out[i + j] = addG(out[i + j], mulG(x[i], y[j]));
    trim(out);
    return out;
}

Coeffs fallingPowerOf(const Coeffs& p, int n, const std::vector<std::vector<long long>>& binom) {
    Coeffs acc = p;
    for (int k = 1; k < n; ++k) acc = convolve(acc, shiftDown(p, k, binom));
    return acc;
}

uint64_t hashCoeffs(const Coeffs& c) {
    uint64_t h = 1469598103934665603ULL;
    for (auto g : c)
        for (long long v : g) {
            h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
    return h;
}

Poly toPoly(const Coeffs& c) {
    std::vector<GaussianRational> v;
    for (auto g : c) v.emplace_back(Rat(g[0]), Rat(g[1]));
    return Poly::fromCoeffs(v);
}

struct Cand {
    Coeffs p, F;
    uint64_t hash = 0;
};

std::string canonicalKey(const Poly& p) { return p.str(); }

}  // namespace

FermatSearchResult fermatSearch(int n, int degMax, int box, unsigned long long shuffleSeed,
                                size_t maxInstances) {
    if (n < 1) throw std::invalid_argument("fermatSearch: n must be at least 1");
    if (degMax < 0) throw std::invalid_argument("fermatSearch: degMax must be nonnegative");
    if (box < 1) throw std::invalid_argument("fermatSearch: box must be at least 1");
    if (box * std::pow(double(n), degMax) * std::pow(2.0, degMax) > 1e15)
        throw std::overflow_error("falling-power search parameters too large for the fast path");
    FermatSearchResult res;
    res.n = n;
    res.degMax = degMax;
    res.box = box;

    std::vector<std::vector<long long>> binom(degMax + 1);
    for (int i = 0; i <= degMax; ++i) {
        binom[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }

    // every nonzero polynomial in the box, expanded to its falling power
    std::vector<Cand> cands;
    std::vector<G> units;
    for (long long re = -box; re <= box; ++re)
        for (long long im = -box; im <= box; ++im) units.push_back({re, im});
    for (int d = 0; d <= degMax; ++d) {
        std::vector<size_t> pick(d + 1, 0);
        while (true) {
            Coeffs cur(d + 1);
            for (int k = 0; k <= d; ++k) cur[k] = units[pick[k]];
            if (cur[d][0] != 0 || cur[d][1] != 0) {
                Cand c;
                c.p = cur;
                c.F = fallingPowerOf(cur, n, binom);
                c.hash = hashCoeffs(c.F);
                cands.push_back(std::move(c));
            }
            int pos = 0;
            while (pos <= d && ++pick[pos] == units.size()) {
                pick[pos] = 0;
                ++pos;
            }
            if (pos > d) break;
        }
    }

    std::unordered_map<uint64_t, std::vector<int>> table;
    table.reserve(cands.size() * 2);
    for (size_t k = 0; k < cands.size(); ++k) table[cands[k].hash].push_back(static_cast<int>(k));

    // group by (degree, leading coefficient) so whole blocks can be ruled out
    std::map<std::pair<int, G>, std::vector<int>> groupMap;
    for (size_t k = 0; k < cands.size(); ++k) {
        const Coeffs& p = cands[k].p;
        groupMap[{static_cast<int>(p.size()) - 1, p.back()}].push_back(static_cast<int>(k));
    }
    struct Group {
        int deg;
        G lead;
        std::vector<int> idx;
    };
    std::vector<Group> groups;
    for (auto& [key, idx] : groupMap) groups.push_back({key.first, key.second, std::move(idx)});
    if (shuffleSeed != 0) {
        std::mt19937_64 rng(shuffleSeed);
        std::shuffle(groups.begin(), groups.end(), rng);
        for (auto& g : groups) std::shuffle(g.idx.begin(), g.idx.end(), rng);
    }
    std::set<G> allowedLeads;
    for (auto u : units)
        if (u[0] != 0 || u[1] != 0) allowedLeads.insert(powG(u, n));

    std::set<std::string> seen;
    Coeffs sum;
    auto probe = [&](const Cand& A, const Cand& B) {
        ++res.pairsConsidered;
        size_t len = std::max(A.F.size(), B.F.size());
        sum.assign(len, G{0, 0});
        for (size_t k = 0; k < A.F.size(); ++k) sum[k] = A.F[k];
        for (size_t k = 0; k < B.F.size(); ++k) sum[k] = addG(sum[k], B.F[k]);
        trim(sum);
        if (sum.empty()) return;
        auto it = table.find(hashCoeffs(sum));
        if (it == table.end()) return;
        for (int ci : it->second) {
            const Cand& C = cands[ci];
            if (C.F != sum) continue;
            ++res.identityHits;
            Poly pa = toPoly(A.p), pb = toPoly(B.p), pc = toPoly(C.p);
            // independent exact route before admitting the triple
            if (pa.fallExpr(n) + pb.fallExpr(n) != pc.fallExpr(n)) continue;
            MarginReport chk = fermatCheck(pa, pb, pc, n);
            if (chk.verdict != Verdict::holds) continue;
            if (canonicalKey(pb) < canonicalKey(pa)) std::swap(pa, pb);
            std::string key = canonicalKey(pa) + "|" + canonicalKey(pb) + "|" + canonicalKey(pc);
            if (!seen.insert(key).second) continue;
            res.instances.push_back({pa, pb, pc});
        }
    };

    for (size_t gi = 0; gi < groups.size() && !res.truncated; ++gi) {
        for (size_t gj = gi; gj < groups.size() && !res.truncated; ++gj) {
            const Group& ga = groups[gi];
            const Group& gb = groups[gj];
            if (ga.deg == gb.deg) {
                G lead = addG(powG(ga.lead, n), powG(gb.lead, n));
                bool cancels = lead[0] == 0 && lead[1] == 0;
                if (!cancels && !allowedLeads.count(lead)) continue;
            }
            for (size_t ia = 0; ia < ga.idx.size() && !res.truncated; ++ia) {
                size_t jb = (gi == gj) ? ia : 0;
                for (size_t ib = jb; ib < gb.idx.size(); ++ib) {
                    probe(cands[ga.idx[ia]], cands[gb.idx[ib]]);
                    if (res.instances.size() >= maxInstances) {
                        res.truncated = true;
                        break;
                    }
                }
            }
        }
    }

    std::sort(res.instances.begin(), res.instances.end(),
              [](const std::array<Poly, 3>& x, const std::array<Poly, 3>& y) {
                  for (int k = 0; k < 3; ++k) {
                      std::string a = x[k].str(), b = y[k].str();
                      if (a != b) return a < b;
                  }
                  return false;
              });
    return res;
}

}  // namespace fallcalc
