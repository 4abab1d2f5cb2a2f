#include "fallcalc/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fallcalc {

void Divisor::add(const GaussianRational& at, int zmult, int pmult) {
    if (zmult < 0 || pmult < 0) throw std::invalid_argument("negative multiplicity");
    if (zmult == 0 && pmult == 0) return;
    auto it = std::lower_bound(pts_.begin(), pts_.end(), at,
                               [](const DivisorPoint& p, const GaussianRational& v) { return p.at < v; });
    if (it == pts_.end() || !(it->at == at)) {
        it = pts_.insert(it, DivisorPoint{at, 0, 0});
    }
    it->zmult += zmult;
    it->pmult += pmult;
    // opposite kinds at one point cancel, mirroring reduction of a quotient
    int net = it->zmult - it->pmult;
    it->zmult = net > 0 ? net : 0;
    it->pmult = net < 0 ? -net : 0;
    if (it->zmult == 0 && it->pmult == 0) pts_.erase(it);
}

Divisor Divisor::fromUnsorted(std::vector<DivisorPoint> pts) {
    std::sort(pts.begin(), pts.end(),
              [](const DivisorPoint& a, const DivisorPoint& b) { return a.at < b.at; });
    Divisor d;
    for (auto& p : pts) {
        if (!d.pts_.empty() && d.pts_.back().at == p.at) {
            d.pts_.back().zmult += p.zmult;
            d.pts_.back().pmult += p.pmult;
        } else {
            d.pts_.push_back(std::move(p));
        }
    }
    auto keep = d.pts_.begin();
    for (auto& p : d.pts_) {
        int net = p.zmult - p.pmult;
        if (net == 0) continue;
        p.zmult = net > 0 ? net : 0;
        p.pmult = net < 0 ? -net : 0;
        *keep++ = std::move(p);
    }
    d.pts_.erase(keep, d.pts_.end());
    return d;
}

Rat Divisor::coveringRadius(int margin) const {
    Rat maxSq = 0;
    for (const auto& p : pts_) maxSq = std::max(maxSq, p.at.normSq());
    Int r = 0;
    double approx = std::sqrt(static_cast<double>(maxSq));
    r = Int(static_cast<long long>(approx));
    while (Rat(r * r) < maxSq) ++r;
    return Rat(r + margin);
}

Divisor Divisor::fromFactored(const FactoredPoly& zeros, const FactoredPoly* poles) {
    Divisor d;
    for (const auto& [root, mult] : zeros.roots) d.addZero(root, mult);
    if (poles)
        for (const auto& [root, mult] : poles->roots) d.addPole(root, mult);
    return d;
}

Divisor Divisor::fromNumeric(const std::vector<NumericRoot>& zeros,
                             const std::vector<NumericRoot>& poles) {
    Divisor d;
    for (const auto& r : zeros) d.addZero(gaussianFromComplex(r.at), r.mult);
    for (const auto& r : poles) d.addPole(gaussianFromComplex(r.at), r.mult);
    return d;
}

Divisor Divisor::fromRationalFunction(const RationalFunction& f, const TolerancePolicy& tol) {
    Divisor d;
    auto side = [&](const Poly& p, PointKind kind) {
        if (p.degree() <= 0) return;
        try {
            FactoredPoly fp = exactRoots(p);
            for (const auto& [root, mult] : fp.roots)
                d.add(root, kind == PointKind::zero ? mult : 0, kind == PointKind::pole ? mult : 0);
        } catch (const ExactFactorizationIncomplete&) {
            for (const auto& r : numericRoots(p, tol))
                d.add(gaussianFromComplex(r.at), kind == PointKind::zero ? r.mult : 0,
                      kind == PointKind::pole ? r.mult : 0);
        }
    };
    side(f.num(), PointKind::zero);
    side(f.den(), PointKind::pole);
    return d;
}

namespace {

// Kind-filtered view with unit-shift neighbor lookup, exact or within eps.
struct PointTable {
    std::vector<GaussianRational> at;
    std::vector<double> reD, imD;
    std::vector<int> mult;
    std::vector<char> inDisc;

    PointTable(const Divisor& d, const Rat& rSq, PointKind kind) {
        for (const auto& p : d.points()) {
            int m = p.mult(kind);
            if (m <= 0) continue;
            at.push_back(p.at);
            reD.push_back(static_cast<double>(p.at.re));
            imD.push_back(static_cast<double>(p.at.im));
            mult.push_back(m);
            inDisc.push_back(p.at.normSq() <= rSq ? 1 : 0);
        }
    }

    int size() const { return static_cast<int>(at.size()); }

    int findExact(const GaussianRational& target) const {
        auto it = std::lower_bound(at.begin(), at.end(), target);
        if (it == at.end() || !(*it == target)) return -1;
        return static_cast<int>(it - at.begin());
    }

    int find(const GaussianRational& target, double eps) const {
        if (eps <= 0.0) return findExact(target);
        double tr = static_cast<double>(target.re), ti = static_cast<double>(target.im);
        auto lo = std::lower_bound(reD.begin(), reD.end(), tr - eps);
        int best = -1;
        double bestDist = 0.0;
        for (auto it = lo; it != reD.end() && *it <= tr + eps; ++it) {
            int i = static_cast<int>(it - reD.begin());
            double dr = reD[static_cast<size_t>(i)] - tr, di = imD[static_cast<size_t>(i)] - ti;
            if (std::fabs(di) > eps) continue;
            double dist = dr * dr + di * di;
            if (best < 0 || dist < bestDist) {
                best = i;
                bestDist = dist;
            }
        }
        return best;
    }

    // neighbor at target + step (step is +1 or -1 on the real axis)
    int neighbor(int i, int step, double eps) const {
        GaussianRational target = at[static_cast<size_t>(i)] + GaussianRational(static_cast<long>(step));
        return find(target, eps);
    }
};

int chainDirection(PointKind kind) { return kind == PointKind::zero ? 1 : -1; }

}  // namespace

int lengthAt(const Divisor& d, const Rat& radius, const GaussianRational& at, PointKind kind,
             double eps) {
    PointTable t(d, radius * radius, kind);
    int dir = chainDirection(kind);
    int i = t.find(at, eps);
    int len = 0;
    while (i >= 0 && t.inDisc[static_cast<size_t>(i)] && t.mult[static_cast<size_t>(i)] > 0) {
        ++len;
        i = t.neighbor(i, dir, eps);
    }
    return len;
}

std::vector<Chain> chainDecompose(const Divisor& d, const Rat& radius, PointKind kind, double eps,
                                  std::mt19937_64* order) {
    PointTable t(d, radius * radius, kind);
    int n = t.size();
    int dir = chainDirection(kind);
    std::vector<int> succ(static_cast<size_t>(n)), pred(static_cast<size_t>(n));
    std::vector<int> rem(static_cast<size_t>(n));
    long total = 0;
    for (int i = 0; i < n; ++i) {
        succ[static_cast<size_t>(i)] = t.neighbor(i, dir, eps);
        pred[static_cast<size_t>(i)] = t.neighbor(i, -dir, eps);
        rem[static_cast<size_t>(i)] = t.inDisc[static_cast<size_t>(i)] ? t.mult[static_cast<size_t>(i)] : 0;
        total += rem[static_cast<size_t>(i)];
    }

    std::vector<Chain> chains;
    std::vector<int> eligible;
    while (total > 0) {
        eligible.clear();
        for (int i = 0; i < n; ++i) {
            if (rem[static_cast<size_t>(i)] <= 0) continue;
            int p = pred[static_cast<size_t>(i)];
            if (p < 0 || rem[static_cast<size_t>(p)] == 0) eligible.push_back(i);
        }
        if (eligible.empty())
            throw std::logic_error("chain decomposition found no eligible start");
        int pick = eligible.front();
        if (order) {
            std::uniform_int_distribution<size_t> dist(0, eligible.size() - 1);
            pick = eligible[dist(*order)];
        }
        Chain c;
        c.start = t.at[static_cast<size_t>(pick)];
        c.kind = kind;
        int j = pick;
        while (j >= 0 && rem[static_cast<size_t>(j)] > 0) {
            --rem[static_cast<size_t>(j)];
            --total;
            ++c.length;
            j = succ[static_cast<size_t>(j)];
        }
        c.clipped = (j >= 0 && !t.inDisc[static_cast<size_t>(j)] && t.mult[static_cast<size_t>(j)] > 0);
        chains.push_back(std::move(c));
    }
    std::sort(chains.begin(), chains.end());
    return chains;
}

int chainCountClosedForm(const Divisor& d, const Rat& radius, PointKind kind, double eps) {
    return chainCountClosedFormSq(d, radius * radius, kind, eps);
}

int chainCountClosedFormSq(const Divisor& d, const Rat& radiusSq, PointKind kind, double eps) {
    PointTable t(d, radiusSq, kind);
    int dir = chainDirection(kind);
    int sum = 0;
    for (int i = 0; i < t.size(); ++i) {
        if (!t.inDisc[static_cast<size_t>(i)]) continue;
        int m = t.mult[static_cast<size_t>(i)];
        int p = t.neighbor(i, -dir, eps);
        int pm = (p >= 0 && t.inDisc[static_cast<size_t>(p)]) ? t.mult[static_cast<size_t>(p)] : 0;
        sum += m - std::min(m, pm);
    }
    return sum;
}

int nTildeIKLT(const Divisor& d, const Rat& radius, double eps) {
    PointTable t(d, radius * radius, PointKind::zero);
    int sum = 0;
    for (int i = 0; i < t.size(); ++i) {
        if (!t.inDisc[static_cast<size_t>(i)]) continue;
        int m = t.mult[static_cast<size_t>(i)];
        int p = t.neighbor(i, +1, eps);  // partner unrestricted by the disc
        int pm = p >= 0 ? t.mult[static_cast<size_t>(p)] : 0;
        sum += m - std::min(m, pm);
    }
    return sum;
}

std::vector<ChainNeighborEntry> chainNeighborTable(const Divisor& d, PointKind kind, double eps) {
    PointTable t(d, Rat(0), kind);
    int dir = chainDirection(kind);
    std::vector<ChainNeighborEntry> out;
    out.reserve(static_cast<size_t>(t.size()));
    for (int i = 0; i < t.size(); ++i) {
        ChainNeighborEntry e;
        e.wSq = t.at[static_cast<size_t>(i)].normSq();
        e.mult = t.mult[static_cast<size_t>(i)];
        int p = t.neighbor(i, -dir, eps);
        if (p >= 0) {
            e.predMult = t.mult[static_cast<size_t>(p)];
            e.predSq = t.at[static_cast<size_t>(p)].normSq();
        }
        out.push_back(std::move(e));
    }
    return out;
}

FactoredPoly differenceRadical(const FactoredPoly& f) {
    Divisor d = Divisor::fromFactored(f);
    auto chains = chainDecompose(d, d.coveringRadius(), PointKind::zero);
    FactoredPoly rad;
    for (const auto& c : chains) {
        bool merged = false;
        for (auto& [root, mult] : rad.roots)
            if (root == c.start) {
                ++mult;
                merged = true;
                break;
            }
        if (!merged) rad.roots.emplace_back(c.start, 1);
    }
    std::sort(rad.roots.begin(), rad.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rad;
}

FactoredPoly classicRadical(const FactoredPoly& f) {
    FactoredPoly rad;
    for (const auto& [root, mult] : f.roots) rad.roots.emplace_back(root, 1);
    return rad;
}

ShiftingPrimeResult relativelyShiftingPrime(const Divisor& zerosF, const Divisor& zerosG,
                                            const Rat& radius, double eps) {
    PointTable tf(zerosF, radius * radius, PointKind::zero);
    PointTable tg(zerosG, radius * radius, PointKind::zero);
    auto scan = [&](const PointTable& a, const PointTable& b) -> std::optional<std::pair<GaussianRational, GaussianRational>> {
        for (int i = 0; i < a.size(); ++i) {
            if (!a.inDisc[static_cast<size_t>(i)]) continue;
            GaussianRational up = a.at[static_cast<size_t>(i)] + GaussianRational(1);
            int j = b.find(up, eps);
            if (j >= 0 && b.inDisc[static_cast<size_t>(j)])
                return std::make_pair(a.at[static_cast<size_t>(i)], b.at[static_cast<size_t>(j)]);
        }
        return std::nullopt;
    };
    ShiftingPrimeResult res;
    auto w = scan(tf, tg);
    if (!w) w = scan(tg, tf);
    if (w) {
        res.prime = false;
        res.witness = w;
    }
    return res;
}

ShiftingPrimeResult relativelyShiftingPrime(const Poly& f, const Poly& g) {
    auto tryWitness = [](const Poly& common) -> std::optional<std::pair<GaussianRational, GaussianRational>> {
        try {
            FactoredPoly fp = exactRoots(common);
            if (!fp.roots.empty()) {
                GaussianRational w = fp.roots.front().first;
                return std::make_pair(w, w + GaussianRational(1));
            }
        } catch (const ExactFactorizationIncomplete&) {
            auto nr = numericRoots(common);
            if (!nr.empty()) {
                GaussianRational w = gaussianFromComplex(nr.front().at);
                return std::make_pair(w, w + GaussianRational(1));
            }
        }
        return std::nullopt;
    };
    ShiftingPrimeResult res;
    Poly g1 = gcd(f, g.shifted(GaussianRational(1)));
    if (g1.degree() > 0) {
        res.prime = false;
        res.witness = tryWitness(g1);
        return res;
    }
    Poly g2 = gcd(g, f.shifted(GaussianRational(1)));
    if (g2.degree() > 0) {
        res.prime = false;
        res.witness = tryWitness(g2);
    }
    return res;
}

bool pairwiseShiftingPrime(const std::vector<Poly>& fs) {
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i + 1; j < fs.size(); ++j)
            if (!relativelyShiftingPrime(fs[i], fs[j]).prime) return false;
    return true;
}

Divisor FiniteSource::enumerate(const Rat& radius) const {
    Rat rSq = radius * radius;
    Divisor out;
    for (const auto& p : all_.points())
        if (p.at.normSq() <= rSq) out.add(p.at, p.zmult, p.pmult);
    return out;
}

Divisor LatticeSource::enumerate(const Rat& radius) const {
    std::vector<DivisorPoint> pts;
    Rat rSq = radius * radius;
    double r = static_cast<double>(radius);
    for (const auto& run : runs_) {
        double a = static_cast<double>(run.anchor.re);
        double b = static_cast<double>(run.anchor.im);
        if (std::fabs(b) > r + 1) continue;
        double span = std::sqrt(std::max(0.0, r * r - b * b));
        long lo = static_cast<long>(std::floor(-a - span)) - 2;
        long hi = static_cast<long>(std::ceil(-a + span)) + 2;
        if (run.extent == Extent::up) lo = std::max(lo, 0L);
        if (run.extent == Extent::down) hi = std::min(hi, 0L);
        for (long k = lo; k <= hi; ++k) {
            GaussianRational pt = run.anchor + GaussianRational(k);
            if (pt.normSq() <= rSq) pts.push_back({std::move(pt), run.zmult, run.pmult});
        }
    }
    return Divisor::fromUnsorted(std::move(pts));
}

Rat LatticeSource::coveringRadius() const {
    throw std::logic_error("a lattice divisor has no covering radius");
}

}  // namespace fallcalc
