#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schurkit {

/// Exact arbitrary-precision rational coefficient. All kernel arithmetic is
/// exact; no floating point anywhere.
using Rat = mpq_class;
using Integer = mpz_class;

/// Thrown for errors in the mathematical domain (bad input data, weight-cap
/// violations, malformed expressions). The CLI maps it to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

/// Exact conversion of a 64-bit count into a rational.
inline Rat to_rat(long long v) { return Rat(Integer(static_cast<long>(v))); }

/// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// Parses "p" or "p/q" with optional leading sign.
Rat rat_from_string(const std::string& text);

}  // namespace schurkit
