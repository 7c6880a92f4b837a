#include <doctest.h>

#include "beerpath/bit_vector.hpp"
#include "beerpath/random.hpp"
#include "support.hpp"

using namespace beerpath;

namespace {

std::vector<bool> random_bits(Rng& rng, std::size_t n, double p) {
  std::vector<bool> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = rng.chance(p);
  return b;
}

void check_against_scan(const std::vector<bool>& bits, const BitVector& bv, Rng& rng, std::size_t samples) {
  const std::size_t n = bits.size();
  std::vector<std::size_t> prefix(n + 1), ones, zeros;
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i] + bits[i];
    (bits[i] ? ones : zeros).push_back(i + 1);
  }
  REQUIRE(bv.size() == n);
  REQUIRE(bv.ones() == ones.size());
  REQUIRE(bv.rank1(n) + bv.rank0(n) == n);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = rng.below(n + 1);
    REQUIRE(bv.rank1(i) == prefix[i]);
    if (i >= 1) {
      REQUIRE(bv.access(i) == bits[i - 1]);
      if (prefix[i] >= 1) REQUIRE(bv.select1(bv.rank1(i)) <= i);
    }
    if (!ones.empty()) {
      const std::size_t j = rng.between(1, ones.size());
      REQUIRE(bv.select1(j) == ones[j - 1]);
      REQUIRE(bv.rank1(bv.select1(j)) == j);
    }
    if (!zeros.empty()) {
      const std::size_t j = rng.between(1, zeros.size());
      REQUIRE(bv.select0(j) == zeros[j - 1]);
    }
  }
}

}  // namespace

TEST_CASE("small vector by hand") {
  for (auto mode : {BitVectorMode::plain, BitVectorMode::compressed}) {
    auto bv = BitVector::from_string("10110", mode);
    CHECK(bv.size() == 5);
    CHECK(bv.ones() == 3);
    CHECK(bv.rank1(3) == 2);
    CHECK(bv.rank0(5) == 2);
    CHECK(bv.rank1(0) == 0);
    CHECK(bv.select1(3) == 4);
    CHECK(bv.select0(1) == 2);
    CHECK(bv.access(1));
    CHECK_FALSE(bv.access(2));
  }
}

TEST_CASE("endpoint string of G15") {
  auto bv = BitVector::from_string(test::kG15);
  CHECK(bv.size() == 30);
  CHECK(bv.ones() == 15);
  CHECK(bv.select0(13) == 19);
}

TEST_CASE("errors") {
  auto bv = BitVector::from_string("10110");
  CHECK_THROWS_AS(bv.rank1(6), Error);
  CHECK_THROWS_AS(bv.select1(4), Error);
  CHECK_THROWS_AS(bv.select0(0), Error);
  try {
    bv.select0(3);
    FAIL("select0(3) on two zeros");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_found);
  }
  try {
    bv.rank0(7);
    FAIL("rank past the end");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::out_of_range);
  }
}

TEST_CASE("compressed size is sublinear for a fixed number of ones") {
  std::vector<std::uint64_t> pos{1, 2, 3};
  const auto small = BitVector(1 << 12, pos, BitVectorMode::compressed).size_in_bits();
  const auto large = BitVector(1 << 20, pos, BitVectorMode::compressed).size_in_bits();
  CHECK(large < 4 * small);
  CHECK(large < (1u << 20) / 16);
  CHECK(BitVector(1 << 20, std::vector<std::uint64_t>{}, BitVectorMode::compressed).size_in_bits() < 1024);
}

TEST_CASE("plain and compressed agree with a linear scan") {
  Rng rng(17);
  for (std::size_t n : {0, 1, 63, 64, 65, 511, 512, 513, 4096, 100000}) {
    for (double p : {0.0, 0.01, 0.5, 0.99, 1.0}) {
      const auto bits = random_bits(rng, n, p);
      check_against_scan(bits, BitVector(bits, BitVectorMode::plain), rng, 300);
      check_against_scan(bits, BitVector(bits, BitVectorMode::compressed), rng, 300);
    }
  }
}

TEST_CASE("million-bit round trips") {
  Rng rng(99);
  const auto bits = random_bits(rng, 1000000, 0.3);
  BitVector plain(bits), sparse(bits, BitVectorMode::compressed);
  check_against_scan(bits, plain, rng, 2000);
  for (int s = 0; s < 20000; ++s) {
    const std::size_t i = rng.below(bits.size() + 1);
    REQUIRE(plain.rank1(i) == sparse.rank1(i));
    const std::size_t j = rng.between(1, plain.ones());
    REQUIRE(plain.select1(j) == sparse.select1(j));
    const std::size_t k = rng.between(1, plain.zeros());
    REQUIRE(plain.select0(k) == sparse.select0(k));
  }
}

TEST_CASE("positions constructor") {
  std::vector<std::uint64_t> pos{2, 5, 9};
  BitVector bv(10, pos);
  CHECK(bv.select1(2) == 5);
  CHECK(bv.rank1(9) == 3);
  std::vector<std::uint64_t> bad{3, 3};
  CHECK_THROWS_AS(BitVector(10, bad), Error);
}
