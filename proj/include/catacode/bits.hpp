#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catacode/errors.hpp"

namespace catacode {

// Dynamic bit string backed by 64-bit words. Bit 0 is the first tape cell.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static BitVec from_string(const std::string& zeros_ones);

  size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void push_back(bool v) {
    if ((size_ & 63) == 0) words_.push_back(0);
    ++size_;
    set(size_ - 1, v);
  }

  // Reads bits [pos, pos+n) as an integer, bit pos in the low position.
  uint64_t read_word(size_t pos, unsigned n) const;
  void write_word(size_t pos, unsigned n, uint64_t value);

  BitVec slice(size_t pos, size_t n) const;

  bool operator==(const BitVec& o) const;
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  size_t hamming_distance(const BitVec& o) const;
  size_t popcount() const;

  std::string to_string() const;

 private:
  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

size_t hamming_distance(const BitVec& a, const BitVec& b);

// ceil(log2(x)) for x >= 1; 0 for x == 1.
unsigned ceil_log2(uint64_t x);
// floor(log2(x)) for x >= 1.
unsigned floor_log2(uint64_t x);

}  // namespace catacode
