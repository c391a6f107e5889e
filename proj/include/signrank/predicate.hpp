#ifndef SIGNRANK_PREDICATE_HPP
#define SIGNRANK_PREDICATE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace signrank {

/// A predicate assigns a sign to each Hamming weight 0..n. Immutable after
/// construction; n >= 1.
class Predicate {
 public:
  explicit Predicate(const std::vector<int>& signs);

  /// Parses a string over {+,-}; whitespace is ignored. "--+++" has n = 4.
  static Predicate from_string(const std::string& text);

  int n() const { return static_cast<int>(signs_.size()) - 1; }

  /// Sign at weight i, +1 or -1.
  int operator()(int i) const;

  const std::vector<int8_t>& signs() const { return signs_; }

  std::string to_string() const;

  bool operator==(const Predicate& o) const = default;

 private:
  std::vector<int8_t> signs_;
};

struct DegreeProfile {
  int deg = 0;   // sign changes at distance 1
  int deg2 = 0;  // sign changes at distance 2
  std::vector<int> flips1;
  std::vector<int> flips2;
};

DegreeProfile degree_profile(const Predicate& p);

/// Reversal: result(i) = p(n - i).
Predicate reverse(const Predicate& p);

/// Window copy: result(i) = p(start + i) for i in {0..length-1}.
Predicate restrict(const Predicate& p, int start, int length);

/// Largest power-of-two window (result.n = 2^a) maximizing the distance-2
/// flip count, smallest start on ties. Returns the window and its start;
/// identity when n is already a power of two. The chosen window always keeps
/// at least half of deg2.
std::pair<Predicate, int> normalize_pow2(const Predicate& p);

Predicate constant_predicate(int n, int sign = +1);
Predicate parity_predicate(int n);

/// -1 below the threshold t, +1 at and above; t in {0..n+1}.
Predicate threshold_predicate(int n, int t);

/// +1 exactly when i mod m lands in the residue set.
Predicate mod_class_predicate(int n, int m, const std::set<int>& residues);

struct ShiftSelection {
  bool reversed = false;  // whether counting ran on the reversed predicate
  int s = 0;              // chosen shift, a multiple of q = n/32
  bool odd_parity = false;
  int window_flips = 0;  // distance-2 flips of the chosen parity in [s, s+q)
};

/// Picks the half (via reversal), parity class and shift s in {0, q, .., 15q}
/// maximizing the distance-2 flip count of that parity inside [s, s+q).
/// Ties prefer the smallest s, then even parity. Requires n a power of two,
/// n >= 64.
ShiftSelection select_shift(const Predicate& p);

namespace detail {
bool is_pow2(int v);
}

}  // namespace signrank

#endif
