#include "freqspec/bit_vector.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace freqspec {

BitVector::BitVector(std::size_t n_bits, bool value)
    : words_(words_for(n_bits), value ? ~Word{0} : Word{0}), n_bits_(n_bits) {
  clear_padding();
}

void BitVector::clear_padding() {
  const std::size_t tail = n_bits_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

bool BitVector::test(std::size_t pos) const {
  if (pos >= n_bits_) {
    throw std::out_of_range("BitVector::test: position " + std::to_string(pos) +
                            " out of range " + std::to_string(n_bits_));
  }
  return (words_[pos / kWordBits] >> (pos % kWordBits)) & Word{1};
}

void BitVector::set(std::size_t pos) {
  if (pos >= n_bits_) {
    throw std::out_of_range("BitVector::set: position " + std::to_string(pos) +
                            " out of range " + std::to_string(n_bits_));
  }
  words_[pos / kWordBits] |= Word{1} << (pos % kWordBits);
}

void BitVector::reset(std::size_t pos) {
  if (pos >= n_bits_) {
    throw std::out_of_range("BitVector::reset: position " + std::to_string(pos) +
                            " out of range " + std::to_string(n_bits_));
  }
  words_[pos / kWordBits] &= ~(Word{1} << (pos % kWordBits));
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const {
  for (Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.n_bits_ != n_bits_) {
    throw std::invalid_argument("BitVector length mismatch in AND");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t intersection_count(std::span<const BitVector::Word> a,
                               std::span<const BitVector::Word> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("intersection_count: word span length mismatch");
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

std::size_t intersection_count(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("intersection_count: BitVector length mismatch");
  }
  return intersection_count(a.words(), b.words());
}

}  // namespace freqspec
