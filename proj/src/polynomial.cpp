#include "dunkl/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <vector>

#include "dunkl/parallel.hpp"

namespace dunkl {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DimensionMismatch("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const Scalar& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(MultiIndex::zeros(nvars), c);
    return p;
}

Polynomial Polynomial::monomial(MultiIndex a, Scalar c) {
    Polynomial p(a.size());
    if (!c.is_zero()) p.terms_.emplace(std::move(a), std::move(c));
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw IndexError("variable index out of range");
    return monomial(MultiIndex::zeros(nvars).with(i - 1, 1), Scalar(1));
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [a, c] : terms_)
        if (a.degree() != d) return false;
    return true;
}

Scalar Polynomial::coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::add_term(const MultiIndex& a, const Scalar& c) {
    if (c.is_zero()) return;
    if (a.size() != nvars_) throw DimensionMismatch("multi-index length != nvars");
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [a, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), a, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial nvars mismatch");
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial nvars mismatch");
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

Polynomial& Polynomial::add_scaled(const Polynomial& o, const Scalar& c) {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial nvars mismatch");
    if (c.is_zero()) return *this;
    for (const auto& [a, oc] : o.terms_) add_term(a, oc * c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) v *= c;  // field: nonzero * nonzero != 0
    return *this;
}

Polynomial Polynomial::mul_serial(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial nvars mismatch");
    Polynomial r(a.nvars_);
    const Polynomial& outer = a.term_count() <= b.term_count() ? b : a;
    const Polynomial& inner = a.term_count() <= b.term_count() ? a : b;
    for (const auto& [ka, va] : outer.terms_)
        for (const auto& [kb, vb] : inner.terms_) r.add_term(ka + kb, va * vb);
    return r;
}

Polynomial Polynomial::mul_parallel(const Polynomial& a, const Polynomial& b, int jobs) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial nvars mismatch");
    const Polynomial& outer = a.term_count() <= b.term_count() ? b : a;
    const Polynomial& inner = a.term_count() <= b.term_count() ? a : b;
    std::vector<const TermMap::value_type*> outer_terms;
    outer_terms.reserve(outer.term_count());
    for (const auto& t : outer.terms_) outer_terms.push_back(&t);

    std::vector<Polynomial> partial;
    if (jobs <= 0) jobs = max_threads();
    partial.assign(static_cast<std::size_t>(std::max(1, jobs)), Polynomial(a.nvars_));
    const std::size_t used = parallel_chunks(
        outer_terms.size(), jobs, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
            Polynomial& acc = partial[chunk];
            for (std::size_t t = lo; t < hi; ++t)
                for (const auto& [kb, vb] : inner.terms_)
                    acc.add_term(outer_terms[t]->first + kb, outer_terms[t]->second * vb);
        });

    // Exact addition is order-independent, so the merged result matches the
    // serial kernel exactly.
    Polynomial r(a.nvars_);
    for (std::size_t c = 0; c < used; ++c) r += partial[c];
    return r;
}

Polynomial Polynomial::mul(const Polynomial& a, const Polynomial& b) {
    const std::size_t work = a.term_count() * b.term_count();
    if (max_threads() > 1 && work >= 4096) return mul_parallel(a, b);
    return mul_serial(a, b);
}

Scalar Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluation point has wrong length");
    Scalar sum;
    for (const auto& [a, c] : terms_) {
        Rational m(1);
        for (int i = 0; i < nvars_; ++i) {
            const int e = a[i];
            for (int k = 0; k < e; ++k) m *= point[static_cast<std::size_t>(i)];
        }
        if (!m.is_zero()) sum += c * Scalar(m);
    }
    return sum;
}

Polynomial Polynomial::times_variable(int i) const {
    if (i < 1 || i > nvars_) throw IndexError("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [a, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), a.with(i - 1, a[i - 1] + 1), c);
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lexicographic, matching the serialized order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            const int e = it->first[i];
            if (e == 0) continue;
            os << "*x" << (i + 1);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace dunkl
