#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catacode/bits.hpp"

namespace catacode::chessboard {

// mem maps a 2^k-bit block to k bits: bit j of the result is the XOR of
// tau[J] over all indices J whose binary representation has bit j set.
// Flipping tau[v] therefore XORs the value v into mem; index 0 is inert.
//
// mem values are handled as integers with bit j weighted 2^j.

inline constexpr unsigned kMaxK = 24;

// Single streaming pass over the block, storing only the index counter and
// the running value.
uint64_t mem_scan(const BitVec& tau, size_t offset, unsigned k);

// Flips the one index that moves mem to `target`; returns it, or nullopt
// when mem already equals target (the flip would land on inert index 0).
std::optional<uint64_t> steer_to(BitVec& tau, size_t offset, unsigned k, uint64_t target);

// Owning block, the shape the lemma speaks about.
struct MemBlock {
  unsigned k = 0;
  BitVec tau;

  static MemBlock zeros(unsigned k);
  static MemBlock from(unsigned k, BitVec bits);
};

uint64_t mem(const MemBlock& block);
std::optional<uint64_t> steer(MemBlock& block, uint64_t target);

struct FlipLog {
  std::vector<uint64_t> steps;
};

// Replays the log from `initial`, requiring every step to change mem in
// exactly one bit, and reports whether "mem returned" implies "tau
// returned". Throws FormatError on an out-of-range step and ContractError
// on a step whose mem delta is not a single bit.
bool verify_revert(const MemBlock& initial, const FlipLog& log);

// Hamming single-error localization: parity vectors before and after one
// underlying data-bit flip differ exactly in the bits of the flipped index.
// Returns nullopt when before == after.
std::optional<uint64_t> locate_single_error(uint64_t before, uint64_t after);

}  // namespace catacode::chessboard
