#include "dunkl/scalar.hpp"

#include <ostream>

namespace dunkl {

Scalar::Scalar(KPoly numerator, KPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("scalar with zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = KPoly::one();
        return;
    }
    if (!den_.is_one()) {
        KPoly g = KPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = KPoly::divexact(num_, g);
            den_ = KPoly::divexact(den_, g);
        }
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool Scalar::is_one() const { return den_.is_one() && num_.is_one(); }

Rational Scalar::to_rational() const {
    if (!is_constant()) throw DomainError("scalar '" + str() + "' is not a constant");
    if (num_.is_zero()) return Rational(0);
    return Rational(num_.coeff(0), den_.coeff(0));
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    // a/b + c/d with g = gcd(b, d): the only factors the raw sum can share
    // with the denominator sit inside g, so one small gcd suffices.
    KPoly g = KPoly::gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = KPoly::one();
        return *this;
    }
    KPoly b1 = KPoly::divexact(den_, g);
    KPoly d1 = KPoly::divexact(o.den_, g);
    KPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) {
        num_ = KPoly();
        den_ = KPoly::one();
        return *this;
    }
    KPoly h = KPoly::gcd(n, g);
    if (!h.is_one()) {
        n = KPoly::divexact(n, h);
        g = KPoly::divexact(g, h);
    }
    num_ = std::move(n);
    den_ = b1 * d1 * g;
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = KPoly();
        den_ = KPoly::one();
        return *this;
    }
    // Cross-reduce so the products stay canonical without a final gcd.
    KPoly a = num_, d = o.den_;
    KPoly g1 = KPoly::gcd(a, d);
    if (!g1.is_one()) {
        a = KPoly::divexact(a, g1);
        d = KPoly::divexact(d, g1);
    }
    KPoly c = o.num_, b = den_;
    KPoly g2 = KPoly::gcd(c, b);
    if (!g2.is_one()) {
        c = KPoly::divexact(c, g2);
        b = KPoly::divexact(b, g2);
    }
    num_ = a * c;
    den_ = b * d;
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("scalar division by zero");
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero scalar");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar base(*this), acc(1);
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

Rational Scalar::specialize(const Rational& k0) const {
    Rational d = den_.eval(k0);
    if (d.is_zero())
        throw PoleError("denominator " + den_.str() + " vanishes at kappa = " + k0.str());
    return num_.eval(k0) / d;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.is_constant() ? num_.str() : "(" + num_.str() + ")";
    std::string d = den_.is_constant() ? den_.str() : "(" + den_.str() + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace dunkl
