#include "catacode/bits.hpp"

#include <bit>

namespace catacode {

BitVec BitVec::from_string(const std::string& zeros_ones) {
  BitVec v(zeros_ones.size());
  for (size_t i = 0; i < zeros_ones.size(); ++i) {
    char ch = zeros_ones[i];
    if (ch == '1')
      v.set(i, true);
    else if (ch != '0')
      throw FormatError("bit string may contain only 0 and 1");
  }
  return v;
}

uint64_t BitVec::read_word(size_t pos, unsigned n) const {
  if (n == 0) return 0;
  if (n > 64 || pos + n > size_) throw ParamError("bit read out of range");
  size_t w = pos >> 6;
  unsigned off = pos & 63;
  uint64_t lo = words_[w] >> off;
  if (off != 0 && w + 1 < words_.size()) lo |= words_[w + 1] << (64 - off);
  return n == 64 ? lo : lo & ((uint64_t{1} << n) - 1);
}

void BitVec::write_word(size_t pos, unsigned n, uint64_t value) {
  if (n == 0) return;
  if (n > 64 || pos + n > size_) throw ParamError("bit write out of range");
  for (unsigned i = 0; i < n; ++i) set(pos + i, (value >> i) & 1);
}

BitVec BitVec::slice(size_t pos, size_t n) const {
  if (pos + n > size_) throw ParamError("slice out of range");
  BitVec out(n);
  for (size_t i = 0; i < n; ++i) out.set(i, get(pos + i));
  return out;
}

bool BitVec::operator==(const BitVec& o) const {
  if (size_ != o.size_) return false;
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != o.words_[w]) return false;
  return true;
}

size_t BitVec::hamming_distance(const BitVec& o) const {
  if (size_ != o.size_) throw ParamError("hamming distance needs equal lengths");
  size_t d = 0;
  for (size_t w = 0; w < words_.size(); ++w)
    d += std::popcount(words_[w] ^ o.words_[w]);
  return d;
}

size_t BitVec::popcount() const {
  size_t d = 0;
  for (uint64_t w : words_) d += std::popcount(w);
  return d;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

size_t hamming_distance(const BitVec& a, const BitVec& b) {
  return a.hamming_distance(b);
}

unsigned ceil_log2(uint64_t x) {
  if (x == 0) throw ParamError("log2 of zero");
  return x == 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1));
}

unsigned floor_log2(uint64_t x) {
  if (x == 0) throw ParamError("log2 of zero");
  return static_cast<unsigned>(std::bit_width(x)) - 1;
}

}  // namespace catacode
