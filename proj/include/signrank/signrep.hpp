#ifndef SIGNRANK_SIGNREP_HPP
#define SIGNRANK_SIGNREP_HPP

#include <optional>
#include <vector>

#include "signrank/fourier.hpp"
#include "signrank/predicate.hpp"
#include "signrank/rational.hpp"

namespace signrank {

/// Dense univariate polynomial over the rationals, coefficient of x^i at
/// index i. Canonical form: no trailing zero coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c);

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rat eval(const Rat& x) const;

  const std::vector<Rat>& coeffs() const { return coeffs_; }

  UniPoly operator*(const UniPoly& o) const;

  bool operator==(const UniPoly& o) const = default;

 private:
  std::vector<Rat> coeffs_;
};

/// Minimal-degree polynomial sign-matching p on {0..n}: one root at i + 1/2
/// per distance-1 flip, leading sign fixed by the value at 0. Its degree is
/// always exactly deg(p).
UniPoly min_sign_poly(const Predicate& p);

/// True iff poly(i) is nonzero with the sign of p(i) for every i in {0..n}.
bool check_sign_match(const UniPoly& poly, const Predicate& p);

struct EvenOddPair {
  Predicate even;  // A(y) = p(2y)
  Predicate odd;   // B(y) = p(2y+1), with p(n+1) read as p(n-1)
};

/// Splits p by argument parity into two predicates on {0..floor(n/2)}. Both
/// halves have degree at most deg2(p).
EvenOddPair even_odd_split(const Predicate& p);

/// 4 * sum_{k=0}^{M} C(floor(n/2)+1, k). Requires 0 <= M <= n.
Int support_bound(int n, int M);

/// Output of the lift construction: a sparse symmetric sign representation
/// of the XOR function of the source predicate.
struct LiftCertificate {
  int n = 0;
  int M = 0;  // deg2 of the source
  UniPoly q1, q2;
  SymmetricFn lifted;     // levels[w] = q1(w/2) for even w, q2((w-1)/2) for odd
  LevelSpectrum spectrum;
  Int support;
  Int bound;
};

/// Builds the certificate: q1/q2 sign-represent the even/odd halves, the
/// lifted levels interleave them, and the spectrum is computed exactly.
LiftCertificate lift(const Predicate& p);

/// Feasibility of a degree-d sign representation, decided by exact rational
/// simplex over the constraints p(i)*poly(i) >= 1. Gated to n <= 16.
struct LpResult {
  bool feasible = false;
  std::optional<UniPoly> witness;
};
LpResult lp_min_degree(const Predicate& p, int d);

struct LiftReport {
  bool sign_ok = false;      // every lifted level sign-matches the predicate
  bool support_ok = false;   // support <= bound
  bool levels_ok = false;    // levels agree with q1/q2 evaluations
  bool spectrum_ok = false;  // spectrum is the exact transform of the levels
  bool support_counted_ok = false;  // stored support matches the spectrum
  std::optional<bool> rank_ok;      // explicit-matrix rank equals support
  std::optional<int> rank;
  bool all(bool include_support = true) const {
    return sign_ok && (support_ok || !include_support) && levels_ok && spectrum_ok &&
           support_counted_ok && rank_ok.value_or(true);
  }
};

/// Re-checks a certificate against its predicate from the stored fields
/// alone. The explicit rank comparison runs only when requested and n <= 10.
LiftReport verify_lift(const LiftCertificate& cert, const Predicate& p,
                       bool with_rank = false);

}  // namespace signrank

#endif
