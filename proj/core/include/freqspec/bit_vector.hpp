#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace freqspec {

/// Fixed-length packed bit set over row positions.
///
/// Bits at positions >= size() are always zero, so word-wise popcount equals
/// the logical popcount and word-wise AND never leaks padding.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t n_bits, bool value = false);

  static std::size_t words_for(std::size_t n_bits) {
    return (n_bits + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const { return n_bits_; }
  bool empty() const { return n_bits_ == 0; }

  bool test(std::size_t pos) const;
  void set(std::size_t pos);
  void reset(std::size_t pos);

  std::size_t count() const;
  bool none() const;

  std::span<const Word> words() const { return words_; }

  BitVector& operator&=(const BitVector& other);

  friend BitVector operator&(BitVector lhs, const BitVector& rhs) {
    lhs &= rhs;
    return lhs;
  }

  bool operator==(const BitVector&) const = default;

 private:
  void clear_padding();

  std::vector<Word> words_;
  std::size_t n_bits_ = 0;
};

/// popcount(a AND b) without materializing the intersection.
std::size_t intersection_count(const BitVector& a, const BitVector& b);

/// popcount over raw word ranges of equal length.
std::size_t intersection_count(std::span<const BitVector::Word> a,
                               std::span<const BitVector::Word> b);

}  // namespace freqspec
