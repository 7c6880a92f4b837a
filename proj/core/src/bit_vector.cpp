#include "beerpath/bit_vector.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "beerpath/error.hpp"

namespace beerpath {

namespace {

constexpr std::size_t kWordsPerSuper = 8;

std::size_t select_in_word(std::uint64_t w, std::size_t j) {  // j >= 1
  for (std::size_t k = 1; k < j; ++k) w &= w - 1;
  return static_cast<std::size_t>(std::countr_zero(w));
}

}  // namespace

PlainBits::PlainBits(const std::vector<bool>& bits) : size_(bits.size()) {
  words_.assign(size_ / 64 + 1, 0);
  for (std::size_t i = 0; i < size_; ++i)
    if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  build_directory();
}

PlainBits::PlainBits(std::size_t length, std::span<const std::uint64_t> one_positions) : size_(length) {
  words_.assign(size_ / 64 + 1, 0);
  for (auto p : one_positions) words_[p >> 6] |= std::uint64_t{1} << (p & 63);
  build_directory();
}

void PlainBits::build_directory() {
  const std::size_t nsuper = words_.size() / kWordsPerSuper + 1;
  super_.assign(nsuper + 1, 0);
  block_.assign(words_.size(), 0);
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < nsuper; ++s) {
    super_[s] = total;
    std::uint64_t rel = 0;
    for (std::size_t w = s * kWordsPerSuper; w < std::min(words_.size(), (s + 1) * kWordsPerSuper); ++w) {
      block_[w] = static_cast<std::uint16_t>(rel);
      rel += std::popcount(words_[w]);
    }
    total += rel;
  }
  super_[nsuper] = total;
  ones_ = total;
}

std::size_t PlainBits::rank1(std::size_t i) const {
  const std::size_t w = i >> 6;
  const std::uint64_t mask = (std::uint64_t{1} << (i & 63)) - 1;
  return super_[w / kWordsPerSuper] + block_[w] + std::popcount(words_[w] & mask);
}

std::size_t PlainBits::select1(std::size_t j) const {
  std::size_t lo = 0, hi = super_.size() - 1;  // last s with super_[s] < j
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (super_[mid] < j) lo = mid; else hi = mid;
  }
  std::size_t left = j - super_[lo];
  for (std::size_t w = lo * kWordsPerSuper;; ++w) {
    const std::size_t c = std::popcount(words_[w]);
    if (c >= left) return w * 64 + select_in_word(words_[w], left);
    left -= c;
  }
}

std::size_t PlainBits::select0(std::size_t j) const {
  auto zeros_before = [&](std::size_t s) { return s * kWordsPerSuper * 64 - super_[s]; };
  std::size_t lo = 0, hi = super_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (zeros_before(mid) < j) lo = mid; else hi = mid;
  }
  std::size_t left = j - zeros_before(lo);
  for (std::size_t w = lo * kWordsPerSuper;; ++w) {
    const std::size_t c = std::popcount(~words_[w]);
    if (c >= left) return w * 64 + select_in_word(~words_[w], left);
    left -= c;
  }
}

std::size_t PlainBits::size_in_bits() const {
  return words_.size() * 64 + super_.size() * 64 + block_.size() * 16 + 2 * 64;
}

SparseBits::SparseBits(std::size_t length, std::span<const std::uint64_t> one_positions)
    : size_(length), ones_(one_positions.size()) {
  const std::size_t m = std::max<std::size_t>(ones_, 1);
  if (size_ > m) low_width_ = static_cast<unsigned>(std::bit_width(size_ / m) - 1);
  lows_.assign((ones_ * low_width_ + 63) / 64 + 1, 0);
  std::vector<std::uint64_t> highs;
  highs.reserve(ones_);
  const std::uint64_t mask = (std::uint64_t{1} << low_width_) - 1;
  for (std::size_t k = 0; k < ones_; ++k) {
    const std::uint64_t x = one_positions[k];
    if (low_width_ > 0) {
      const std::uint64_t bit = k * low_width_;
      lows_[bit >> 6] |= (x & mask) << (bit & 63);
      if ((bit & 63) + low_width_ > 64) lows_[(bit >> 6) + 1] |= (x & mask) >> (64 - (bit & 63));
    }
    highs.push_back((x >> low_width_) + k);
  }
  high_ = PlainBits((size_ >> low_width_) + ones_ + 1, highs);
}

std::uint64_t SparseBits::low(std::size_t k) const {
  if (low_width_ == 0) return 0;
  const std::uint64_t bit = k * low_width_;
  const std::uint64_t mask = (std::uint64_t{1} << low_width_) - 1;
  std::uint64_t v = lows_[bit >> 6] >> (bit & 63);
  if ((bit & 63) + low_width_ > 64) v |= lows_[(bit >> 6) + 1] << (64 - (bit & 63));
  return v & mask;
}

std::size_t SparseBits::rank1(std::size_t i) const {
  if (i >= size_) return ones_;
  const std::size_t hb = i >> low_width_;
  const std::uint64_t lb = i & ((std::uint64_t{1} << low_width_) - 1);
  std::size_t q = hb == 0 ? 0 : high_.select0(hb) + 1;
  std::size_t k = q - hb;
  while (q < high_.size() && high_.get(q) && low(k) < lb) {
    ++q;
    ++k;
  }
  return k;
}

std::size_t SparseBits::select1(std::size_t j) const {
  const std::size_t q = high_.select1(j);
  const std::uint64_t high = q - (j - 1);
  return static_cast<std::size_t>((high << low_width_) | low(j - 1));
}

std::size_t SparseBits::select0(std::size_t j) const {
  // k = number of ones before the j-th zero; select1(k) - k is nondecreasing in k
  std::size_t lo = 0, hi = ones_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (select1(mid) < (j - 1) + mid) lo = mid; else hi = mid - 1;
  }
  return (j - 1) + lo;
}

std::size_t SparseBits::size_in_bits() const {
  return lows_.size() * 64 + high_.size_in_bits() + 3 * 64;
}

BitVector::BitVector(const std::vector<bool>& bits, BitVectorMode mode) {
  if (mode == BitVectorMode::plain) {
    impl_ = PlainBits(bits);
    return;
  }
  std::vector<std::uint64_t> pos;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) pos.push_back(i);
  impl_ = SparseBits(bits.size(), pos);
}

BitVector::BitVector(std::size_t length, std::span<const std::uint64_t> one_positions, BitVectorMode mode) {
  std::vector<std::uint64_t> pos;
  pos.reserve(one_positions.size());
  std::uint64_t prev = 0;
  for (auto p : one_positions) {
    if (p < 1 || p > length || p <= prev) raise(Errc::out_of_range, "one positions must be increasing in [1, length]");
    pos.push_back(p - 1);
    prev = p;
  }
  if (mode == BitVectorMode::plain)
    impl_ = PlainBits(length, pos);
  else
    impl_ = SparseBits(length, pos);
}

BitVector BitVector::from_string(std::string_view bits, BitVectorMode mode) {
  std::vector<bool> v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') raise(Errc::parse_error, "bit string must contain only 0 and 1");
    v[i] = bits[i] == '1';
  }
  return BitVector(v, mode);
}

BitVectorMode BitVector::mode() const {
  return std::holds_alternative<PlainBits>(impl_) ? BitVectorMode::plain : BitVectorMode::compressed;
}

std::size_t BitVector::size() const {
  return std::visit([](const auto& b) { return b.size(); }, impl_);
}

std::size_t BitVector::ones() const {
  return std::visit([](const auto& b) { return b.ones(); }, impl_);
}

bool BitVector::access(std::size_t i) const {
  if (i < 1 || i > size()) raise(Errc::out_of_range, "access position " + std::to_string(i));
  return std::visit([i](const auto& b) { return b.get(i - 1); }, impl_);
}

std::size_t BitVector::rank1(std::size_t i) const {
  if (i > size()) raise(Errc::out_of_range, "rank position " + std::to_string(i));
  return std::visit([i](const auto& b) { return b.rank1(i); }, impl_);
}

std::size_t BitVector::rank0(std::size_t i) const { return i - rank1(i); }

std::size_t BitVector::select1(std::size_t j) const {
  if (j < 1 || j > ones()) raise(Errc::not_found, "select1 ordinal " + std::to_string(j));
  return std::visit([j](const auto& b) { return b.select1(j); }, impl_) + 1;
}

std::size_t BitVector::select0(std::size_t j) const {
  if (j < 1 || j > zeros()) raise(Errc::not_found, "select0 ordinal " + std::to_string(j));
  return std::visit([j](const auto& b) { return b.select0(j); }, impl_) + 1;
}

std::size_t BitVector::size_in_bits() const {
  return std::visit([](const auto& b) { return b.size_in_bits(); }, impl_);
}

}  // namespace beerpath
