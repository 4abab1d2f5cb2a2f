#include "fallcalc/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace fallcalc {

Poly::Poly(GaussianRational c0) {
    if (!c0.isZero()) c_.push_back(std::move(c0));
}

Poly Poly::variable() {
    Poly p;
    p.c_ = {GaussianRational(0), GaussianRational(1)};
    return p;
}

Poly Poly::fromCoeffs(std::vector<GaussianRational> lowFirst) {
    Poly p;
    p.c_ = std::move(lowFirst);
    p.normalize();
    return p;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

GaussianRational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational(0);
    return c_[static_cast<size_t>(k)];
}

GaussianRational Poly::leading() const {
    if (c_.empty()) return GaussianRational(0);
    return c_.back();
}

int Poly::valuationAtZero() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].isZero()) return static_cast<int>(k);
    return -1;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k) {
        if (k < c_.size()) r.c_[k] += c_[k];
        if (k < o.c_.size()) r.c_[k] += o.c_[k];
    }
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (isZero() || o.isZero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, GaussianRational(0));
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].isZero()) continue;
        for (size_t b = 0; b < o.c_.size(); ++b)
            r.c_[a + b] += c_[a] * o.c_[b];
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(const GaussianRational& s) const {
    if (s.isZero()) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    Poly r(GaussianRational(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

GaussianRational Poly::eval(const GaussianRational& z) const {
    GaussianRational acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
}

std::complex<double> Poly::evalC(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k].toComplex();
    return acc;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        r.c_[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    r.normalize();
    return r;
}

Poly Poly::shifted(const GaussianRational& c) const {
    // Horner: p(z+c) accumulated as acc = acc*(z+c) + a_k.
    Poly acc;
    Poly zc = Poly::fromCoeffs({c, GaussianRational(1)});
    for (size_t k = c_.size(); k-- > 0;) acc = acc * zc + Poly(c_[k]);
    return acc;
}

Poly Poly::delta(int n) const {
    if (n < 0) throw std::invalid_argument("negative difference order");
    Poly r = *this;
    for (int k = 0; k < n; ++k) r = r.shifted(GaussianRational(1)) - r;
    return r;
}

Poly Poly::fallExpr(int n) const {
    if (n < 0) throw std::invalid_argument("negative falling extent");
    Poly r(GaussianRational(1));
    for (int k = 0; k < n; ++k) r = r * shifted(GaussianRational(-static_cast<long>(k)));
    return r;
}

Poly Poly::monic() const {
    if (isZero()) return *this;
    return scaled(GaussianRational(1) / leading());
}

Poly Poly::fallingPower(int n) { return fallingPower(GaussianRational(0), n); }

Poly Poly::fallingPower(const GaussianRational& start, int n) {
    if (n < 0) throw std::invalid_argument("negative falling extent");
    Poly r(GaussianRational(1));
    for (int k = 0; k < n; ++k) {
        GaussianRational root = start + GaussianRational(static_cast<long>(k));
        r = r * Poly::fromCoeffs({-root, GaussianRational(1)});
    }
    return r;
}

std::vector<GaussianRational> Poly::toNewton() const {
    // Repeated synthetic division: p = c0 + z*(c1 + (z-1)*(c2 + ...)).
    std::vector<GaussianRational> out;
    Poly rem = *this;
    long k = 0;
    while (!rem.isZero()) {
        Poly lin = Poly::fromCoeffs({GaussianRational(-k), GaussianRational(1)});
        auto [q, r] = divmod(rem, lin);
        out.push_back(r.coeff(0));
        rem = q;
        ++k;
    }
    return out;
}

Poly Poly::fromNewton(const std::vector<GaussianRational>& newton) {
    Poly acc;
    for (size_t k = newton.size(); k-- > 0;) {
        Poly lin = Poly::fromCoeffs({GaussianRational(-static_cast<long>(k)), GaussianRational(1)});
        acc = acc * lin + Poly(newton[k]);
    }
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        GaussianRational a = coeff(k);
        if (a.isZero()) continue;
        std::string mag;
        bool negated = false;
        if (a.isReal() && a.re < 0) {
            negated = true;
            a = -a;
        }
        bool unitCoeff = (a == GaussianRational(1)) && k > 0;
        if (!unitCoeff) {
            std::string as = a.str();
            bool needsParens = !a.isReal() && !a.re.is_zero();
            mag = needsParens ? "(" + as + ")" : as;
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        if (k == 0) {
            os << (mag.empty() ? "1" : mag);
        } else {
            if (!mag.empty()) os << mag << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.isZero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    std::vector<GaussianRational> q;
    int db = b.degree();
    if (rem.degree() >= db) q.assign(static_cast<size_t>(rem.degree() - db) + 1, GaussianRational(0));
    GaussianRational lb = b.leading();
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        GaussianRational f = rem.leading() / lb;
        q[static_cast<size_t>(shift)] = f;
        std::vector<GaussianRational> sub(static_cast<size_t>(shift), GaussianRational(0));
        for (const auto& bc : b.coeffs()) sub.push_back(bc * f);
        rem = rem - Poly::fromCoeffs(std::move(sub));
    }
    return {Poly::fromCoeffs(std::move(q)), rem};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.monic(), y = b.monic();
    while (!y.isZero()) {
        // keep remainders monic to tame coefficient growth
        Poly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

bool divides(const Poly& d, const Poly& a) {
    if (d.isZero()) return a.isZero();
    return divmod(a, d).second.isZero();
}

int rootMultiplicity(const Poly& p, const GaussianRational& at) {
    if (p.isZero()) throw std::domain_error("root multiplicity of the zero polynomial");
    Poly lin = Poly::fromCoeffs({-at, GaussianRational(1)});
    int m = 0;
    Poly rem = p;
    while (true) {
        auto [q, r] = divmod(rem, lin);
        if (!r.isZero()) return m;
        ++m;
        rem = q;
    }
}

}  // namespace fallcalc
