#include "signrank/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace signrank {

namespace {

// One triangle per thread; rows are appended and never mutated again, so
// lookups need no locking.
thread_local std::vector<std::vector<Int>> pascal_rows;

void ensure_pascal(int n) {
  while (static_cast<int>(pascal_rows.size()) <= n) {
    const int m = static_cast<int>(pascal_rows.size());
    std::vector<Int> row(m + 1);
    row[0] = 1;
    row[m] = 1;
    for (int k = 1; k < m; ++k) row[k] = pascal_rows[m - 1][k - 1] + pascal_rows[m - 1][k];
    pascal_rows.push_back(std::move(row));
  }
}

}  // namespace

Int binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n < 0");
  if (k < 0 || k > n) return 0;
  ensure_pascal(n);
  return pascal_rows[n][k];
}

Int pow2_int(unsigned e) {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
  return v;
}

Rat pow2_rat(int e) {
  if (e >= 0) return Rat(pow2_int(static_cast<unsigned>(e)));
  return Rat(1, pow2_int(static_cast<unsigned>(-e)));
}

int ceil_log2(const Int& v) {
  if (sgn(v) <= 0) throw std::invalid_argument("ceil_log2: value must be >= 1");
  const size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  const bool exact_power = mpz_popcount(v.get_mpz_t()) == 1;
  return static_cast<int>(exact_power ? bits - 1 : bits);
}

double log2_approx(const Int& v) {
  if (sgn(v) == 0) return -std::numeric_limits<double>::infinity();
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp2);
}

double log2_approx(const Rat& v) {
  return log2_approx(Int(v.get_num())) - log2_approx(Int(v.get_den()));
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rat v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (sgn(Int(v.get_den())) == 0) throw std::invalid_argument("rational: zero denominator");
  v.canonicalize();
  return v;
}

std::string rat_to_string(const Rat& v) { return v.get_str(); }

}  // namespace signrank
