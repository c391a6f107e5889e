#ifndef SIGNRANK_BITVEC_HPP
#define SIGNRANK_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace signrank {

// Fixed-length bit vector backed by 64-bit words. Bit i of the vector is
// character i of its string form ('0'/'1', leftmost first).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {
    if (nbits < 0) throw std::invalid_argument("BitVec: negative length");
  }

  static BitVec from_string(const std::string& s) {
    BitVec v(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(static_cast<int>(i));
      else if (s[i] != '0')
        throw std::invalid_argument("BitVec: invalid character in bitstring");
    }
    return v;
  }

  int size() const { return nbits_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void set(int i, bool value = true) {
    const uint64_t mask = uint64_t{1} << (i & 63);
    if (value)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }

  int popcount() const {
    int total = 0;
    for (uint64_t word : w_) total += std::popcount(word);
    return total;
  }

  std::string to_string() const {
    std::string s(nbits_, '0');
    for (int i = 0; i < nbits_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend int and_weight(const BitVec& a, const BitVec& b) {
    require_same_size(a, b);
    int total = 0;
    for (size_t i = 0; i < a.w_.size(); ++i) total += std::popcount(a.w_[i] & b.w_[i]);
    return total;
  }

  friend int xor_weight(const BitVec& a, const BitVec& b) {
    require_same_size(a, b);
    int total = 0;
    for (size_t i = 0; i < a.w_.size(); ++i) total += std::popcount(a.w_[i] ^ b.w_[i]);
    return total;
  }

  bool operator==(const BitVec& o) const = default;

 private:
  static void require_same_size(const BitVec& a, const BitVec& b) {
    if (a.nbits_ != b.nbits_) throw std::invalid_argument("BitVec: length mismatch");
  }

  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace signrank

#endif
