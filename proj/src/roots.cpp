#include "fallcalc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fallcalc {

Poly FactoredPoly::expand() const {
    Poly r(lead);
    for (const auto& [root, mult] : roots) {
        Poly lin = Poly::fromCoeffs({-root, GaussianRational(1)});
        r = r * lin.pow(mult);
    }
    return r;
}

int FactoredPoly::totalMultiplicity() const {
    int t = 0;
    for (const auto& [root, mult] : roots) t += mult;
    return t;
}

std::string FactoredPoly::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    if (!(lead == GaussianRational(1)) || roots.empty()) {
        std::string ls = lead.str();
        os << (lead.isReal() || lead.re.is_zero() ? ls : "(" + ls + ")");
        first = false;
    }
    for (const auto& [root, mult] : roots) {
        if (!first) os << "*";
        first = false;
        if (root.isZero()) {
            os << var;
        } else if (root.isReal()) {
            os << "(" << var << (root.re < 0 ? "+" + ratToString(-root.re) : "-" + ratToString(root.re)) << ")";
        } else {
            os << "(" << var << "-(" << root.str() << "))";
        }
        if (mult > 1) os << "^" << mult;
    }
    return os.str();
}

Rat rationalize(double x, long long denBound) {
    if (!std::isfinite(x)) throw std::domain_error("cannot rationalize a non-finite value");
    bool neg = x < 0;
    double v = std::fabs(x);
    // continued fraction convergents p/q of v
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rem = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(rem);
        if (fl > 9e17) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > denBound || p2 < 0 || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = rem - fl;
        if (frac < 1e-15 * std::max(1.0, v)) break;
        rem = 1.0 / frac;
    }
    if (q1 == 0) return Rat(0);
    Rat out(p1, q1);
    return neg ? Rat(-out) : out;
}

namespace {

// Aberth-Ehrlich on a monic complex polynomial given lowest-first coefficients.
std::vector<std::complex<double>> aberth(const std::vector<std::complex<double>>& coef) {
    using C = std::complex<double>;
    int n = static_cast<int>(coef.size()) - 1;
    std::vector<C> dcoef(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) dcoef[static_cast<size_t>(k - 1)] = coef[static_cast<size_t>(k)] * double(k);

    auto horner = [](const std::vector<C>& cs, C z) {
        C acc = 0.0;
        for (size_t k = cs.size(); k-- > 0;) acc = acc * z + cs[k];
        return acc;
    };

    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(coef[static_cast<size_t>(k)]));
    radius = 1.0 + radius;

    std::vector<C> z(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        double ang = 2.0 * M_PI * j / n + 0.376;
        z[static_cast<size_t>(j)] = std::polar(radius, ang);
    }

    for (int iter = 0; iter < 240; ++iter) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            C zj = z[static_cast<size_t>(j)];
            C pv = horner(coef, zj);
            C dv = horner(dcoef, zj);
            if (dv == C(0.0)) dv = C(1e-30, 1e-30);
            C w = pv / dv;
            C sum = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                C d = zj - z[static_cast<size_t>(k)];
                if (d == C(0.0)) d = C(1e-30, 1e-30);
                sum += 1.0 / d;
            }
            C denom = 1.0 - w * sum;
            C corr = (denom == C(0.0)) ? w : w / denom;
            z[static_cast<size_t>(j)] = zj - corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(zj)));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

}  // namespace

std::vector<NumericRoot> numericRoots(const Poly& p, const TolerancePolicy& tol) {
    if (p.isZero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<NumericRoot> out;
    int val = p.valuationAtZero();
    Poly q = p;
    if (val > 0) {
        std::vector<GaussianRational> cs(p.coeffs().begin() + val, p.coeffs().end());
        q = Poly::fromCoeffs(std::move(cs));
        out.push_back({std::complex<double>(0.0, 0.0), val});
    }
    int n = q.degree();
    if (n <= 0) return out;

    std::vector<std::complex<double>> coef(static_cast<size_t>(n) + 1);
    std::complex<double> lead = q.leading().toComplex();
    for (int k = 0; k <= n; ++k) coef[static_cast<size_t>(k)] = q.coeff(k).toComplex() / lead;

    auto raw = aberth(coef);

    // residual validation against a backward-stable bound
    for (auto zj : raw) {
        double bound = 0.0, zp = 1.0;
        for (size_t k = 0; k < coef.size(); ++k) {
            bound += std::abs(coef[k]) * zp;
            zp *= std::abs(zj);
        }
        std::complex<double> acc = 0.0;
        for (size_t k = coef.size(); k-- > 0;) acc = acc * zj + coef[k];
        if (std::abs(acc) > 1e-7 * std::max(bound, 1.0))
            throw NumericalNonConvergence("root iteration residual too large");
    }

    std::sort(raw.begin(), raw.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<std::complex<double>> centers;
    std::vector<int> counts;
    for (auto zj : raw) {
        bool merged = false;
        for (size_t c = 0; c < centers.size(); ++c) {
            double eps = tol.root_eps * (1.0 + std::abs(centers[c]));
            if (std::abs(zj - centers[c]) <= eps) {
                centers[c] = (centers[c] * double(counts[c]) + zj) / double(counts[c] + 1);
                ++counts[c];
                merged = true;
                break;
            }
        }
        if (!merged) {
            centers.push_back(zj);
            counts.push_back(1);
        }
    }
    for (size_t c = 0; c < centers.size(); ++c) out.push_back({centers[c], counts[c]});
    return out;
}

FactoredPoly exactRoots(const Poly& p) {
    if (p.isZero()) throw std::domain_error("factorization of the zero polynomial");
    FactoredPoly f;
    f.lead = p.leading();
    if (p.isConstant()) return f;

    Poly rem = p;
    int val = p.valuationAtZero();
    if (val > 0) {
        std::vector<GaussianRational> cs(p.coeffs().begin() + val, p.coeffs().end());
        rem = Poly::fromCoeffs(std::move(cs));
        f.roots.emplace_back(GaussianRational(0), val);
    }

    if (rem.degree() > 0) {
        // Numeric roots of the square-free part suggest candidates; every root
        // is then verified and deflated exactly, so no tolerance leaks through.
        Poly sf = divmod(rem, gcd(rem, rem.derivative())).first;
        TolerancePolicy tight;
        tight.root_eps = 1e-9;
        auto guesses = numericRoots(sf, tight);
        std::vector<GaussianRational> seen;
        for (const auto& g : guesses) {
            GaussianRational cand(rationalize(g.at.real()), rationalize(g.at.imag()));
            if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
            seen.push_back(cand);
            Poly lin = Poly::fromCoeffs({-cand, GaussianRational(1)});
            int mult = 0;
            while (true) {
                auto [quo, rest] = divmod(rem, lin);
                if (!rest.isZero()) break;
                rem = quo;
                ++mult;
            }
            if (mult > 0) f.roots.emplace_back(cand, mult);
        }
    }

    if (rem.degree() > 0)
        throw ExactFactorizationIncomplete(
            "irreducible factor of degree " + std::to_string(rem.degree()) +
            " has no Gaussian-rational roots");
    std::sort(f.roots.begin(), f.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

}  // namespace fallcalc
