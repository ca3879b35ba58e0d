#include "dunkl/json_io.hpp"

#include <limits>

namespace dunkl {

namespace {

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
    return Json(z.get_str());  // decimal string once past the int range
}

Json kpoly_to_json(const KPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
    return arr;
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Integer(s);
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed integer literal '" + s + "'");
        }
    }
    throw ParseError("expected an integer or a decimal string");
}

KPoly kpoly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient array");
    std::vector<Integer> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(integer_from_json(e));
    return KPoly(std::move(c));
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.is_constant()) return Json(s.to_rational().str());
    Json j = Json::object();
    j["num"] = kpoly_to_json(s.num());
    j["den"] = kpoly_to_json(s.den());
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw ParseError("scalar object needs 'num' and 'den'");
        KPoly den = kpoly_from_json(j.at("den"));
        if (den.is_zero()) throw ParseError("scalar denominator is identically zero");
        return Scalar(kpoly_from_json(j.at("num")), std::move(den));
    }
    throw ParseError("expected a scalar ('p/q', integer, or {num, den})");
}

Json poly_to_json(const Polynomial& f) {
    Json j = Json::object();
    j["nvars"] = f.nvars();
    Json terms = Json::array();
    const auto& m = f.terms();
    for (auto it = m.rbegin(); it != m.rend(); ++it) {  // descending lex
        Json t = Json::object();
        t["exp"] = it->first.exponents();
        t["coef"] = scalar_to_json(it->second);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        throw ParseError("polynomial object needs 'nvars' and 'terms'");
    if (!j.at("nvars").is_number_integer()) throw ParseError("'nvars' must be an integer");
    const int nvars = j.at("nvars").get<int>();
    if (nvars < 1) throw ParseError("'nvars' must be positive");
    Polynomial f(nvars);
    if (!j.at("terms").is_array()) throw ParseError("'terms' must be an array");
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw ParseError("term needs 'exp' and 'coef'");
        const auto& je = t.at("exp");
        if (!je.is_array() || static_cast<int>(je.size()) != nvars)
            throw ParseError("'exp' must be an array of length nvars");
        std::vector<int> e;
        e.reserve(je.size());
        for (const auto& x : je) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw ParseError("exponents must be nonnegative integers");
            e.push_back(x.get<int>());
        }
        // add_term merges duplicates and drops explicit zero coefficients,
        // so any well-formed input lands in canonical form.
        f.add_term(MultiIndex(std::move(e)), scalar_from_json(t.at("coef")));
    }
    return f;
}

std::string serialize(const Polynomial& f) { return poly_to_json(f).dump(); }

Polynomial parse_polynomial(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         static_cast<std::ptrdiff_t>(e.byte));
    }
    return poly_from_json(j);
}

}  // namespace dunkl
