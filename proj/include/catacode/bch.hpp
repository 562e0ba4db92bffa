#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "catacode/bits.hpp"
#include "catacode/gf2r.hpp"
#include "catacode/meter.hpp"

namespace catacode::bch {

using gf2r::FieldCtx;
using gf2r::Symbol;

// Systematic BCH instance over GF(2^r) with r = ceil(log2(c+e)) and
// distance delta = 2e+1. The tape packs into n_data symbols of r bits; 2e
// check symbols are appended.
struct CodecParams {
  uint32_t c = 0;         // catalytic tape length in bits
  uint32_t e = 0;         // correctable bit errors
  uint32_t r = 0;         // symbol width, ceil(log2(c+e))
  uint32_t delta = 0;     // 2e+1
  uint32_t n_data = 0;    // ceil(c/r)
  uint32_t pad_bits = 0;  // n_data*r - c

  static CodecParams make(uint32_t c, uint32_t e);

  uint32_t n_total() const { return n_data + 2 * e; }
  uint32_t codeword_bits() const { return n_total() * r; }
  // Clean bits held while a tape stays encoded: check symbols plus padding.
  uint32_t stored_check_bits() const { return 2 * e * r + pad_bits; }
};

struct Codeword {
  CodecParams params;
  std::vector<Symbol> data;    // n_data symbols, tape verbatim
  std::vector<Symbol> checks;  // 2e solved symbols

  std::vector<Symbol> word() const;  // data ++ checks
};

struct Syndrome {
  std::vector<Symbol> values;  // s_1 .. s_{delta-1}
  bool all_zero() const;
};

struct ErrorSupport {
  // (symbol position, error value), positions ascending, values nonzero.
  std::vector<std::pair<uint32_t, Symbol>> entries;
};

struct DecodeResult {
  Codeword codeword;
  ErrorSupport support;
  uint32_t j_used = 0;  // parameter at which the shrinking loop stopped
};

class BchCodec {
 public:
  explicit BchCodec(CodecParams params);

  const CodecParams& params() const { return params_; }
  const FieldCtx& field() const { return field_; }

  // Position pos carries index g^(pos+1) in F*; injective and never zero.
  Symbol index_of(uint32_t pos) const;

  std::vector<Symbol> pack_tape(const BitVec& tape) const;
  BitVec unpack_data(std::span<const Symbol> data) const;

  // s_i over the full word, and the data-only partial sum s_i' (the sign is
  // immaterial in characteristic 2).
  Symbol compute_syndrome(std::span<const Symbol> word, uint32_t i) const;
  Symbol compute_partial(std::span<const Symbol> data, uint32_t i) const;
  Syndrome syndrome(std::span<const Symbol> word, meter::Meter* meter = nullptr) const;

  Codeword encode(const BitVec& tape, meter::Meter* meter = nullptr) const;
  DecodeResult decode(std::span<const Symbol> word, meter::Meter* meter = nullptr) const;

  // Codeword bits <-> symbols, r bits per symbol, constant term first.
  BitVec word_to_bits(std::span<const Symbol> word) const;
  std::vector<Symbol> word_from_bits(const BitVec& bits) const;

 private:
  Symbol power_sum(std::span<const Symbol> symbols, uint32_t i) const;

  CodecParams params_;
  FieldCtx field_;
};

// XORs the chosen bit positions; positions must be distinct and in range.
BitVec corrupt(const BitVec& word_bits, std::span<const uint64_t> flips);

}  // namespace catacode::bch
