#ifndef DUNKL_CONTEXT_HPP
#define DUNKL_CONTEXT_HPP

#include <optional>

#include "dunkl/scalar.hpp"

namespace dunkl {

/// Ambient data for the Dunkl operators: the number of variables N >= 2
/// and the kappa mode.  Generic mode keeps kappa as a formal symbol;
/// specialized mode substitutes an exact rational value up front.
struct DunklContext {
    int N;
    std::optional<Rational> kappa;  // nullopt = generic

    static DunklContext generic(int n) { return DunklContext(n, std::nullopt); }
    static DunklContext specialized(int n, Rational k) { return DunklContext(n, std::move(k)); }

    DunklContext(int n, std::optional<Rational> k) : N(n), kappa(std::move(k)) {
        if (n < 2) throw RangeError("Dunkl context needs N >= 2");
    }

    bool is_generic() const { return !kappa.has_value(); }

    /// kappa as a Scalar: the formal symbol, or the specialized constant.
    Scalar kappa_scalar() const { return is_generic() ? Scalar::kappa() : Scalar(*kappa); }
};

}  // namespace dunkl

#endif
