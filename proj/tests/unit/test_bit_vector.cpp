#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "freqspec/bit_vector.hpp"

namespace freqspec {
namespace {

TEST(BitVector, ConstructsCleared) {
  const BitVector v(130);
  EXPECT_EQ(v.size(), 130u);
  EXPECT_EQ(v.count(), 0u);
  EXPECT_TRUE(v.none());
  EXPECT_EQ(v.words().size(), 3u);
}

TEST(BitVector, AllOnesKeepsPaddingClean) {
  for (std::size_t n : {1u, 63u, 64u, 65u, 127u, 128u, 200u}) {
    const BitVector v(n, true);
    EXPECT_EQ(v.count(), n);
    const std::size_t tail = n % 64;
    if (tail != 0) EXPECT_EQ(v.words().back() >> tail, 0u) << n;
  }
}

TEST(BitVector, SetResetTest) {
  BitVector v(70);
  v.set(0);
  v.set(69);
  EXPECT_TRUE(v.test(0));
  EXPECT_TRUE(v.test(69));
  EXPECT_FALSE(v.test(35));
  EXPECT_EQ(v.count(), 2u);
  v.reset(0);
  EXPECT_FALSE(v.test(0));
  EXPECT_THROW(v.set(70), std::out_of_range);
  EXPECT_THROW((void)v.test(70), std::out_of_range);
}

TEST(BitVector, AndRejectsLengthMismatch) {
  BitVector a(10), b(11);
  EXPECT_THROW(a &= b, std::invalid_argument);
  EXPECT_THROW((void)intersection_count(a, b), std::invalid_argument);
}

TEST(BitVector, PopcountMatchesPerBitCountOnRandomVectors) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 500;
    BitVector a(n), b(n);
    std::size_t naive_a = 0, naive_ab = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool x = gen() & 1, y = gen() & 1;
      if (x) a.set(i);
      if (y) b.set(i);
      naive_a += x;
      naive_ab += x && y;
    }
    EXPECT_EQ(a.count(), naive_a);
    EXPECT_EQ(intersection_count(a, b), naive_ab);
    EXPECT_EQ((a & b).count(), naive_ab);
    EXPECT_EQ(intersection_count(a.words(), b.words()), naive_ab);
  }
}

}  // namespace
}  // namespace freqspec
