#include "signrank/fourier.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace signrank {

namespace {

void check_levels(const SymmetricFn& f) {
  if (f.n < 0 || f.levels.size() != static_cast<size_t>(f.n) + 1)
    throw std::invalid_argument("symmetric function: levels must have n+1 entries");
}

void check_coeffs(const LevelSpectrum& spec) {
  if (spec.n < 0 || spec.coeffs.size() != static_cast<size_t>(spec.n) + 1)
    throw std::invalid_argument("spectrum: coeffs must have n+1 entries");
}

// Full kernel table K[k][w] = krawtchouk_eval(n,k,w) via the three-term
// recurrence in w; O(n^2) integer ops instead of O(n^3).
std::vector<std::vector<Int>> kernel_table(int n) {
  std::vector<std::vector<Int>> K(n + 1, std::vector<Int>(n + 1));
  for (int k = 0; k <= n; ++k) {
    K[k][0] = 1;
    if (n >= 1) K[k][1] = n - 2 * k;
    for (int w = 1; w + 1 <= n; ++w) {
      Int next = (n - 2 * k) * K[k][w] - (n - w + 1) * K[k][w - 1];
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned>(w + 1));
      K[k][w + 1] = std::move(next);
    }
  }
  return K;
}

// Clears denominators: returns integer numerators and the common denominator.
std::pair<std::vector<Int>, Int> scale_to_integers(const std::vector<Rat>& values) {
  Int den = 1;
  for (const Rat& v : values) {
    Int d(v.get_den()), g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den *= d / g;
  }
  std::vector<Int> nums;
  nums.reserve(values.size());
  for (const Rat& v : values) nums.push_back(Int(v.get_num()) * (den / Int(v.get_den())));
  return {std::move(nums), std::move(den)};
}

}  // namespace

Int krawtchouk_eval(int n, int k, int w) {
  if (n < 0 || k < 0 || k > n || w < 0 || w > n)
    throw std::invalid_argument("krawtchouk_eval: indices out of range");
  Int acc = 0;
  const int lo = std::max(0, w - (n - k));
  const int hi = std::min(k, w);
  for (int j = lo; j <= hi; ++j) {
    Int term = binomial(k, j) * binomial(n - k, w - j);
    if (j & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

LevelSpectrum symmetric_spectrum(const SymmetricFn& f) {
  check_levels(f);
  const int n = f.n;
  const auto K = kernel_table(n);
  auto [nums, den] = scale_to_integers(f.levels);
  const Int full_den = den * pow2_int(static_cast<unsigned>(n));

  LevelSpectrum spec;
  spec.n = n;
  spec.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    Int acc = 0;
    for (int w = 0; w <= n; ++w) acc += nums[w] * K[k][w];
    Rat c(acc, full_den);
    c.canonicalize();
    spec.coeffs[k] = std::move(c);
  }
  return spec;
}

SymmetricFn reconstruct_levels(const LevelSpectrum& spec) {
  check_coeffs(spec);
  const int n = spec.n;
  const auto K = kernel_table(n);
  auto [nums, den] = scale_to_integers(spec.coeffs);

  SymmetricFn f;
  f.n = n;
  f.levels.resize(n + 1);
  for (int w = 0; w <= n; ++w) {
    Int acc = 0;
    // sum over sets of size k at a point of weight w: kernel with roles swapped
    for (int k = 0; k <= n; ++k) acc += nums[k] * K[w][k];
    Rat v(acc, den);
    v.canonicalize();
    f.levels[w] = std::move(v);
  }
  return f;
}

FullSpectrum wht_full(std::vector<Rat> values) {
  const size_t len = values.size();
  if (len == 0 || (len & (len - 1)) != 0)
    throw std::invalid_argument("wht_full: length must be a power of two");
  const int n = std::countr_zero(len);

  for (size_t half = 1; half < len; half <<= 1) {
    for (size_t block = 0; block < len; block += 2 * half) {
      for (size_t i = block; i < block + half; ++i) {
        Rat a = values[i] + values[i + half];
        Rat b = values[i] - values[i + half];
        values[i] = std::move(a);
        values[i + half] = std::move(b);
      }
    }
  }
  const Rat scale = pow2_rat(-n);
  for (Rat& v : values) v *= scale;
  return FullSpectrum{n, std::move(values)};
}

Int support_size(const LevelSpectrum& spec) {
  check_coeffs(spec);
  Int total = 0;
  for (int k = 0; k <= spec.n; ++k)
    if (sgn(spec.coeffs[k]) != 0) total += binomial(spec.n, k);
  return total;
}

Int xor_matrix_rank(const LevelSpectrum& spec) { return support_size(spec); }

Rat spectral_norm_xor(const LevelSpectrum& spec) {
  check_coeffs(spec);
  Rat best = 0;
  for (const Rat& c : spec.coeffs) {
    Rat a = abs(c);
    if (a > best) best = a;
  }
  return best * pow2_rat(spec.n);
}

namespace {

// Echelon rank over integer rows: pivot by smallest bit size, update
// v <- (p/g) v - (e/g) u, gcd-reduce the updated row.
int echelon_rank(std::vector<std::vector<Int>>& rows) {
  const size_t nrows = rows.size();
  const size_t ncols = nrows ? rows[0].size() : 0;
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < nrows; ++col) {
    size_t piv = nrows;
    for (size_t i = rank; i < nrows; ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      if (piv == nrows || mpz_sizeinbase(rows[i][col].get_mpz_t(), 2) <
                              mpz_sizeinbase(rows[piv][col].get_mpz_t(), 2))
        piv = i;
    }
    if (piv == nrows) continue;
    std::swap(rows[rank], rows[piv]);
    const Int& p = rows[rank][col];
    for (size_t i = rank + 1; i < nrows; ++i) {
      Int& e = rows[i][col];
      if (sgn(e) == 0) continue;
      Int g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), e.get_mpz_t());
      const Int a = p / g;
      const Int b = e / g;
      Int content = 0;
      for (size_t j = col; j < ncols; ++j) {
        rows[i][j] = a * rows[i][j] - b * rows[rank][j];
        if (content != 1) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), rows[i][j].get_mpz_t());
      }
      if (content > 1)
        for (size_t j = col; j < ncols; ++j) rows[i][j] /= content;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int rational_matrix_rank(const std::vector<std::vector<Rat>>& m) {
  if (m.empty()) return 0;
  const size_t ncols = m[0].size();
  std::vector<std::vector<Int>> rows;
  rows.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != ncols) throw std::invalid_argument("rank: ragged matrix");
    auto [nums, den] = scale_to_integers(row);
    rows.push_back(std::move(nums));
  }
  return echelon_rank(rows);
}

int explicit_xor_rank(const SymmetricFn& f) {
  check_levels(f);
  if (f.n > 10) throw std::invalid_argument("explicit_xor_rank: gated to n <= 10");
  auto [lev, den] = scale_to_integers(f.levels);
  const size_t size = size_t{1} << f.n;
  std::vector<std::vector<Int>> rows(size, std::vector<Int>(size));
  for (size_t x = 0; x < size; ++x)
    for (size_t y = 0; y < size; ++y) rows[x][y] = lev[std::popcount(x ^ y)];
  return echelon_rank(rows);
}

}  // namespace signrank
