#include "signrank/predicate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace signrank {

namespace detail {
bool is_pow2(int v) { return v >= 1 && (v & (v - 1)) == 0; }
}  // namespace detail

Predicate::Predicate(const std::vector<int>& signs) {
  if (signs.size() < 2)
    throw std::invalid_argument("predicate: need at least two sign values");
  signs_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("predicate: entries must be +1 or -1");
    signs_.push_back(static_cast<int8_t>(s));
  }
}

Predicate Predicate::from_string(const std::string& text) {
  std::vector<int> signs;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '+')
      signs.push_back(1);
    else if (c == '-')
      signs.push_back(-1);
    else
      throw std::invalid_argument(std::string("predicate: invalid character '") + c + "'");
  }
  return Predicate(signs);
}

int Predicate::operator()(int i) const {
  if (i < 0 || i > n()) throw std::out_of_range("predicate: weight out of range");
  return signs_[i];
}

std::string Predicate::to_string() const {
  std::string s;
  s.reserve(signs_.size());
  for (int8_t v : signs_) s.push_back(v > 0 ? '+' : '-');
  return s;
}

DegreeProfile degree_profile(const Predicate& p) {
  DegreeProfile prof;
  const int n = p.n();
  for (int i = 0; i + 1 <= n; ++i)
    if (p(i) != p(i + 1)) prof.flips1.push_back(i);
  for (int i = 0; i + 2 <= n; ++i)
    if (p(i) != p(i + 2)) prof.flips2.push_back(i);
  prof.deg = static_cast<int>(prof.flips1.size());
  prof.deg2 = static_cast<int>(prof.flips2.size());
  return prof;
}

Predicate reverse(const Predicate& p) {
  const int n = p.n();
  std::vector<int> signs(n + 1);
  for (int i = 0; i <= n; ++i) signs[i] = p(n - i);
  return Predicate(signs);
}

Predicate restrict(const Predicate& p, int start, int length) {
  if (start < 0 || length < 2 || start + length > p.n() + 1)
    throw std::invalid_argument("restrict: window out of range");
  std::vector<int> signs(length);
  for (int i = 0; i < length; ++i) signs[i] = p(start + i);
  return Predicate(signs);
}

std::pair<Predicate, int> normalize_pow2(const Predicate& p) {
  const int n = p.n();
  if (detail::is_pow2(n)) return {p, 0};

  int a = 0;
  while ((2 << a) <= n) ++a;  // largest a with 2^a <= n
  const int length = (1 << a) + 1;

  const auto flips2 = degree_profile(p).flips2;
  int best_start = 0, best_count = -1;
  for (int start = 0; start + length <= n + 1; ++start) {
    int count = 0;
    for (int i : flips2)
      if (i >= start && i + 2 <= start + length - 1) ++count;
    if (count > best_count) {
      best_count = count;
      best_start = start;
    }
  }
  return {restrict(p, best_start, length), best_start};
}

Predicate constant_predicate(int n, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("constant: sign must be +1 or -1");
  if (n < 1) throw std::invalid_argument("constant: n must be >= 1");
  return Predicate(std::vector<int>(n + 1, sign));
}

Predicate parity_predicate(int n) {
  if (n < 1) throw std::invalid_argument("parity: n must be >= 1");
  std::vector<int> signs(n + 1);
  for (int i = 0; i <= n; ++i) signs[i] = (i % 2 == 0) ? 1 : -1;
  return Predicate(signs);
}

Predicate threshold_predicate(int n, int t) {
  if (n < 1) throw std::invalid_argument("threshold: n must be >= 1");
  if (t < 0 || t > n + 1) throw std::invalid_argument("threshold: t must be in {0..n+1}");
  std::vector<int> signs(n + 1);
  for (int i = 0; i <= n; ++i) signs[i] = (i >= t) ? 1 : -1;
  return Predicate(signs);
}

Predicate mod_class_predicate(int n, int m, const std::set<int>& residues) {
  if (n < 1) throw std::invalid_argument("mod_class: n must be >= 1");
  if (m < 1) throw std::invalid_argument("mod_class: modulus must be >= 1");
  for (int r : residues)
    if (r < 0 || r >= m) throw std::invalid_argument("mod_class: residue out of range");
  std::vector<int> signs(n + 1);
  for (int i = 0; i <= n; ++i) signs[i] = residues.count(i % m) ? 1 : -1;
  return Predicate(signs);
}

ShiftSelection select_shift(const Predicate& p) {
  const int n = p.n();
  if (!detail::is_pow2(n) || n < 64)
    throw std::invalid_argument("select_shift: n must be a power of two, n >= 64");

  ShiftSelection sel;

  // Keep the half with the majority of the distance-2 flips in [0, n/2).
  const auto prof = degree_profile(p);
  int lower = 0;
  for (int i : prof.flips2)
    if (i < n / 2) ++lower;
  sel.reversed = lower < (prof.deg2 + 1) / 2;

  const Predicate q_pred = sel.reversed ? reverse(p) : p;
  const auto flips2 = degree_profile(q_pred).flips2;

  const int q = n / 32;
  int best = -1;
  for (int s = 0; s <= 15 * q; s += q) {
    for (int parity = 0; parity <= 1; ++parity) {
      int count = 0;
      for (int i : flips2)
        if (i >= s && i < s + q && i % 2 == parity) ++count;
      if (count > best) {
        best = count;
        sel.s = s;
        sel.odd_parity = (parity == 1);
        sel.window_flips = count;
      }
    }
  }
  return sel;
}

}  // namespace signrank
