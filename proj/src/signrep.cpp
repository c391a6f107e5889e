#include "signrank/signrep.hpp"

#include <stdexcept>
#include <utility>

namespace signrank {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

Rat UniPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly min_sign_poly(const Predicate& p) {
  const auto prof = degree_profile(p);
  UniPoly poly = UniPoly::constant(1);
  for (int i : prof.flips1) {
    // root between i and i+1, at the half-integer
    poly = poly * UniPoly({Rat(-(2 * i + 1), 2), Rat(1)});
  }
  const int sign_at_zero = (prof.deg % 2 == 0) ? 1 : -1;
  if (sign_at_zero != p(0)) {
    std::vector<Rat> neg = poly.coeffs();
    for (Rat& c : neg) c = -c;
    poly = UniPoly(std::move(neg));
  }
  return poly;
}

bool check_sign_match(const UniPoly& poly, const Predicate& p) {
  for (int i = 0; i <= p.n(); ++i)
    if (sign_of(poly.eval(Rat(i))) != p(i)) return false;
  return true;
}

EvenOddPair even_odd_split(const Predicate& p) {
  const int n = p.n();
  const int half = n / 2;
  std::vector<int> a(half + 1), b(half + 1);
  for (int y = 0; y <= half; ++y) {
    a[y] = p(2 * y);
    b[y] = (2 * y + 1 <= n) ? p(2 * y + 1) : p(n - 1);
  }
  return EvenOddPair{Predicate(a), Predicate(b)};
}

Int support_bound(int n, int M) {
  if (M < 0 || M > n) throw std::invalid_argument("support_bound: need 0 <= M <= n");
  Int total = 0;
  for (int k = 0; k <= M; ++k) total += binomial(n / 2 + 1, k);
  return 4 * total;
}

LiftCertificate lift(const Predicate& p) {
  const int n = p.n();
  LiftCertificate cert;
  cert.n = n;
  cert.M = degree_profile(p).deg2;

  const auto halves = even_odd_split(p);
  cert.q1 = min_sign_poly(halves.even);
  cert.q2 = min_sign_poly(halves.odd);

  cert.lifted.n = n;
  cert.lifted.levels.resize(n + 1);
  for (int w = 0; w <= n; ++w)
    cert.lifted.levels[w] =
        (w % 2 == 0) ? cert.q1.eval(Rat(w, 2)) : cert.q2.eval(Rat(w - 1, 2));

  cert.spectrum = symmetric_spectrum(cert.lifted);
  cert.support = support_size(cert.spectrum);
  cert.bound = support_bound(n, cert.M);
  return cert;
}

// ---- exact simplex (phase 1) ------------------------------------------------

namespace {

// Minimizes the artificial sum for { A c >= 1 } with free coefficients
// c = u - v, slack s and artificial a per constraint. Bland's rule on both
// the entering and leaving choices guarantees termination.
class FeasibilitySimplex {
 public:
  FeasibilitySimplex(const std::vector<std::vector<Rat>>& lhs) {
    m_ = lhs.size();
    nc_ = lhs[0].size();
    ncols_ = 2 * nc_ + 2 * m_;
    rows_.assign(m_, std::vector<Rat>(ncols_ + 1, Rat(0)));
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      for (size_t j = 0; j < nc_; ++j) {
        rows_[i][j] = lhs[i][j];
        rows_[i][nc_ + j] = -lhs[i][j];
      }
      rows_[i][2 * nc_ + i] = -1;        // slack
      rows_[i][2 * nc_ + m_ + i] = 1;    // artificial
      rows_[i][ncols_] = 1;              // rhs
      basis_[i] = 2 * nc_ + m_ + i;
    }
    // objective row: reduced costs r_j = c_j - sum_i T_ij (artificial costs
    // are 1, basis is the artificial identity); the rhs slot carries the
    // negated objective value and transforms like any other column.
    obj_.assign(ncols_ + 1, Rat(0));
    for (size_t j = 0; j <= ncols_; ++j) {
      Rat s = 0;
      for (size_t i = 0; i < m_; ++i) s += rows_[i][j];
      obj_[j] = -s;
    }
    for (size_t i = 0; i < m_; ++i) obj_[2 * nc_ + m_ + i] += 1;
  }

  bool solve() {
    for (;;) {
      size_t enter = ncols_;
      for (size_t j = 0; j < ncols_; ++j)
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == ncols_) break;

      size_t leave = m_;
      Rat best_ratio;
      for (size_t i = 0; i < m_; ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rat ratio = rows_[i][ncols_] / rows_[i][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) throw std::logic_error("simplex: phase-1 objective unbounded");
      pivot(leave, enter);
    }
    return sgn(obj_[ncols_]) == 0;  // all artificials driven to zero
  }

  std::vector<Rat> coefficient_values() const {
    std::vector<Rat> x(ncols_, Rat(0));
    for (size_t i = 0; i < m_; ++i) x[basis_[i]] = rows_[i][ncols_];
    std::vector<Rat> c(nc_);
    for (size_t j = 0; j < nc_; ++j) c[j] = x[j] - x[nc_ + j];
    return c;
  }

 private:
  void pivot(size_t l, size_t e) {
    const Rat p = rows_[l][e];
    for (Rat& v : rows_[l]) v /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == l || sgn(rows_[i][e]) == 0) continue;
      const Rat f = rows_[i][e];
      for (size_t j = 0; j <= ncols_; ++j) rows_[i][j] -= f * rows_[l][j];
    }
    if (sgn(obj_[e]) != 0) {
      const Rat f = obj_[e];
      for (size_t j = 0; j <= ncols_; ++j) obj_[j] -= f * rows_[l][j];
    }
    basis_[l] = e;
  }

  size_t m_ = 0, nc_ = 0, ncols_ = 0;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> obj_;
  std::vector<size_t> basis_;
};

}  // namespace

LpResult lp_min_degree(const Predicate& p, int d) {
  const int n = p.n();
  if (n > 16) throw std::invalid_argument("lp_min_degree: gated to n <= 16");
  if (d < 0 || d > n) throw std::invalid_argument("lp_min_degree: need 0 <= d <= n");

  // constraint i: p(i) * sum_j c_j i^j >= 1
  std::vector<std::vector<Rat>> lhs(n + 1, std::vector<Rat>(d + 1));
  for (int i = 0; i <= n; ++i) {
    Rat power = 1;
    for (int j = 0; j <= d; ++j) {
      lhs[i][j] = Rat(p(i)) * power;
      power *= i;
    }
  }

  FeasibilitySimplex simplex(lhs);
  LpResult result;
  result.feasible = simplex.solve();
  if (result.feasible) {
    UniPoly witness(simplex.coefficient_values());
    if (!check_sign_match(witness, p))
      throw std::logic_error("lp_min_degree: witness fails sign check");
    result.witness = std::move(witness);
  }
  return result;
}

// -----------------------------------------------------------------------------

LiftReport verify_lift(const LiftCertificate& cert, const Predicate& p, bool with_rank) {
  if (cert.n != p.n() || cert.lifted.levels.size() != static_cast<size_t>(cert.n) + 1 ||
      cert.spectrum.coeffs.size() != static_cast<size_t>(cert.n) + 1)
    throw std::invalid_argument("verify_lift: certificate shape does not match predicate");

  LiftReport report;
  const int n = cert.n;

  report.sign_ok = true;
  for (int w = 0; w <= n; ++w)
    if (sign_of(cert.lifted.levels[w]) != p(w)) report.sign_ok = false;

  report.levels_ok = true;
  for (int w = 0; w <= n; ++w) {
    const Rat expect =
        (w % 2 == 0) ? cert.q1.eval(Rat(w, 2)) : cert.q2.eval(Rat(w - 1, 2));
    if (cert.lifted.levels[w] != expect) report.levels_ok = false;
  }

  const LevelSpectrum recomputed = symmetric_spectrum(cert.lifted);
  report.spectrum_ok = recomputed.coeffs == cert.spectrum.coeffs;

  report.support_counted_ok = (cert.support == support_size(cert.spectrum)) &&
                              (cert.M == degree_profile(p).deg2) &&
                              (cert.bound == support_bound(n, cert.M));
  report.support_ok = cert.support <= cert.bound;

  if (with_rank && n <= 10) {
    const int rank = explicit_xor_rank(cert.lifted);
    report.rank = rank;
    report.rank_ok = (Int(rank) == cert.support);
  }
  return report;
}

}  // namespace signrank
