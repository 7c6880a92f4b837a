#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace beerpath {

enum class BitVectorMode { plain, compressed };

// Uncompressed bits with a two-level rank directory. Select is a binary
// search over superblock counts followed by an in-word scan.
class PlainBits {
 public:
  PlainBits() = default;
  explicit PlainBits(const std::vector<bool>& bits);
  PlainBits(std::size_t length, std::span<const std::uint64_t> one_positions);  // 0-based positions

  std::size_t size() const { return size_; }
  std::size_t ones() const { return ones_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }  // 0-based
  std::size_t rank1(std::size_t i) const;    // ones in [0, i)
  std::size_t select1(std::size_t j) const;  // 0-based position of j-th one, j >= 1
  std::size_t select0(std::size_t j) const;
  std::size_t size_in_bits() const;

 private:
  void build_directory();

  std::size_t size_ = 0;
  std::size_t ones_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> super_;  // ones before each 512-bit superblock
  std::vector<std::uint16_t> block_;  // ones before each word, relative to its superblock
};

// Elias-Fano: low bits packed, high parts in unary inside a PlainBits.
class SparseBits {
 public:
  SparseBits() = default;
  SparseBits(std::size_t length, std::span<const std::uint64_t> one_positions);

  std::size_t size() const { return size_; }
  std::size_t ones() const { return ones_; }
  bool get(std::size_t i) const { return rank1(i + 1) != rank1(i); }
  std::size_t rank1(std::size_t i) const;
  std::size_t select1(std::size_t j) const;
  std::size_t select0(std::size_t j) const;
  std::size_t size_in_bits() const;

 private:
  std::uint64_t low(std::size_t k) const;

  std::size_t size_ = 0;
  std::size_t ones_ = 0;
  unsigned low_width_ = 0;
  std::vector<std::uint64_t> lows_;
  PlainBits high_;
};

// 1-based rank/select/access over a static bit sequence.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(const std::vector<bool>& bits, BitVectorMode mode = BitVectorMode::plain);
  BitVector(std::size_t length, std::span<const std::uint64_t> one_positions,
            BitVectorMode mode = BitVectorMode::plain);  // 1-based positions, strictly increasing

  static BitVector from_string(std::string_view bits, BitVectorMode mode = BitVectorMode::plain);

  BitVectorMode mode() const;
  std::size_t size() const;
  std::size_t ones() const;
  std::size_t zeros() const { return size() - ones(); }
  std::size_t count(int bit) const { return bit ? ones() : zeros(); }

  bool access(std::size_t i) const;
  std::size_t rank1(std::size_t i) const;
  std::size_t rank0(std::size_t i) const;
  std::size_t rank(std::size_t i, int bit) const { return bit ? rank1(i) : rank0(i); }
  std::size_t select1(std::size_t j) const;
  std::size_t select0(std::size_t j) const;
  std::size_t select(std::size_t j, int bit) const { return bit ? select1(j) : select0(j); }

  std::size_t size_in_bits() const;

 private:
  std::variant<PlainBits, SparseBits> impl_;
};

}  // namespace beerpath
