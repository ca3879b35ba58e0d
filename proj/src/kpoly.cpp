#include "dunkl/kpoly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace dunkl {

namespace {
const Integer kZero(0);
}

KPoly::KPoly(const Integer& constant) {
    if (constant != 0) c_.push_back(constant);
}

KPoly::KPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

KPoly KPoly::kappa() { return KPoly(std::vector<Integer>{Integer(0), Integer(1)}); }

void KPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& KPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

const Integer& KPoly::coeff(std::size_t i) const {
    if (i >= c_.size()) return kZero;
    return c_[i];
}

KPoly KPoly::operator-() const {
    KPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

KPoly& KPoly::operator+=(const KPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return KPoly();
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return KPoly(std::move(r));
}

void KPoly::mul_int(const Integer& k) {
    if (k == 0) {
        c_.clear();
        return;
    }
    for (auto& x : c_) x *= k;
}

void KPoly::divexact_int(const Integer& k) {
    for (auto& x : c_) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    }
}

Integer KPoly::content() const {
    Integer g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a  mod  b.
// Requires b nonzero and deg a >= deg b.
KPoly prem(KPoly a, const KPoly& b) {
    const int db = b.degree();
    const Integer& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const Integer la = a.leading();
        std::vector<Integer> t(a.coeffs());
        for (auto& x : t) x *= lb;
        for (int i = 0; i <= db; ++i) t[static_cast<std::size_t>(i + shift)] -= la * b.coeff(i);
        a = KPoly(std::move(t));
    }
    return a;
}

KPoly primitive_part(const KPoly& p) {
    if (p.is_zero()) return p;
    KPoly r(p);
    Integer c = p.content();
    if (p.leading() < 0) c = -c;
    r.divexact_int(c);
    return r;
}

}  // namespace

KPoly KPoly::gcd(const KPoly& a, const KPoly& b) {
    if (a.is_zero() && b.is_zero()) return KPoly();
    Integer cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    KPoly u = primitive_part(a);
    KPoly v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    // Primitive polynomial remainder sequence.
    while (!v.is_zero()) {
        KPoly r = primitive_part(prem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    u.mul_int(cont);
    return u;
}

KPoly KPoly::divexact(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.is_zero()) return KPoly();
    const int db = b.degree();
    int da = a.degree();
    if (da < db) throw Error("inexact polynomial division");
    std::vector<Integer> rem(a.coeffs());
    std::vector<Integer> q(static_cast<std::size_t>(da - db) + 1);
    for (int d = da; d >= db; --d) {
        Integer& top = rem[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
            throw Error("inexact polynomial division");
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        q[static_cast<std::size_t>(d - db)] = f;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= f * b.coeff(i);
    }
    for (const auto& x : rem)
        if (x != 0) throw Error("inexact polynomial division");
    return KPoly(std::move(q));
}

Rational KPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

std::string KPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        Integer mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const KPoly& p) { return os << p.str(); }

}  // namespace dunkl
