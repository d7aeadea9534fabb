// Exact rational scalars (GMP-backed) used as series coefficients.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ringflow {

using Rat = mpq_class;

// Fatal internal failure of a solver self-check (must not occur on valid input).
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid run configuration (bad parameter combination, not a math failure).
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return mpq_sgn(q.get_mpq_t()) == 0; }

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

// Canonical "num/den" form ("num" when the denominator is 1).
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad literal '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace ringflow
