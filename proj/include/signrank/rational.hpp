#ifndef SIGNRANK_RATIONAL_HPP
#define SIGNRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace signrank {

// Exact arithmetic used throughout: arbitrary-precision integers and
// canonical rationals. Zero tests are exact; no tolerances anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& v) { return sgn(v); }
inline int sign_of(const Rat& v) { return sgn(v); }

/// C(n, k) as an exact integer, served from a thread-local Pascal triangle.
Int binomial(int n, int k);

Int pow2_int(unsigned e);

/// 2^e for possibly negative e.
Rat pow2_rat(int e);

/// Smallest c with 2^c >= v; requires v >= 1.
int ceil_log2(const Int& v);

/// Floating-point log2 for display fields only.
double log2_approx(const Int& v);
double log2_approx(const Rat& v);

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

/// Canonical "p" or "p/q" form, matching rat_from_string.
std::string rat_to_string(const Rat& v);

}  // namespace signrank

#endif
