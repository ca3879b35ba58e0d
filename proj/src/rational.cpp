#include "dunkl/rational.hpp"

#include <cctype>
#include <ostream>

namespace dunkl {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    auto fail = [&](std::ptrdiff_t pos) {
        throw ParseError("malformed rational '" + text + "'", pos);
    };
    if (text.empty()) fail(0);
    auto is_int = [&](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) fail(0);
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num)) fail(0);
    if (!is_int(den)) fail(static_cast<std::ptrdiff_t>(slash) + 1);
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'",
                                 static_cast<std::ptrdiff_t>(slash) + 1);
    return Rational(Integer(num), d);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dunkl
