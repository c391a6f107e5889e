#ifndef SIGNRANK_FOURIER_HPP
#define SIGNRANK_FOURIER_HPP

#include <vector>

#include "signrank/rational.hpp"

namespace signrank {

/// A symmetric function on the n-cube, stored by its value on each Hamming
/// level: levels[w] is the value at any input of weight w.
struct SymmetricFn {
  int n = 0;
  std::vector<Rat> levels;
};

/// Level-collapsed Fourier spectrum of a symmetric function: coeffs[k] is the
/// common coefficient of every set of size k.
struct LevelSpectrum {
  int n = 0;
  std::vector<Rat> coeffs;
};

/// Full spectrum indexed by subset bitmask; the brute-force companion of
/// LevelSpectrum.
struct FullSpectrum {
  int n = 0;
  std::vector<Rat> coeffs;
};

/// Character sum over the weight-w slice against a fixed set of size k:
/// sum_j (-1)^j C(k,j) C(n-k, w-j). Exact integer; 0 <= k, w <= n.
Int krawtchouk_eval(int n, int k, int w);

/// coeffs[k] = 2^-n * sum_w levels[w] * krawtchouk_eval(n, k, w).
LevelSpectrum symmetric_spectrum(const SymmetricFn& f);

/// Inverse of symmetric_spectrum: levels[w] = sum_k coeffs[k] * K(n, w, k).
SymmetricFn reconstruct_levels(const LevelSpectrum& spec);

/// Walsh-Hadamard transform of a value table of power-of-two length,
/// coeffs[S] = 2^-n * sum_x values[x] * (-1)^|x AND S|. In-place butterfly.
FullSpectrum wht_full(std::vector<Rat> values);

/// Number of nonzero coefficients counted with level multiplicity:
/// sum of C(n,k) over levels k with coeffs[k] != 0 (exact zero test).
Int support_size(const LevelSpectrum& spec);

/// Rank of the 2^n x 2^n matrix (x,y) -> f(x XOR y); equals the nonzero
/// coefficient count of the spectrum.
Int xor_matrix_rank(const LevelSpectrum& spec);

/// Spectral norm of the same matrix: 2^n * max_k |coeffs[k]|.
Rat spectral_norm_xor(const LevelSpectrum& spec);

/// Gaussian-elimination rank of the explicit 2^n x 2^n matrix
/// (x,y) -> f(x XOR y), computed in exact arithmetic with no reference to
/// the spectrum. Memory-gated to n <= 10.
int explicit_xor_rank(const SymmetricFn& f);

/// Exact rank of a dense rational matrix by row echelon reduction. Rows are
/// rescaled to integers and gcd-reduced as elimination proceeds; rescaling
/// preserves rank.
int rational_matrix_rank(const std::vector<std::vector<Rat>>& m);

}  // namespace signrank

#endif
