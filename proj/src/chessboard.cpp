#include "catacode/chessboard.hpp"

#include <bit>

#include "catacode/errors.hpp"

namespace catacode::chessboard {

uint64_t mem_scan(const BitVec& tau, size_t offset, unsigned k) {
  if (k < 1 || k > kMaxK) throw ParamError("block exponent k out of range");
  size_t len = size_t{1} << k;
  if (offset + len > tau.size()) throw ParamError("block exceeds tape bounds");
  uint64_t acc = 0;
  for (uint64_t j = 0; j < len; ++j) {
    if (tau.get(offset + j)) acc ^= j;
  }
  return acc;
}

std::optional<uint64_t> steer_to(BitVec& tau, size_t offset, unsigned k, uint64_t target) {
  if (target >> k) throw ParamError("steer target wider than k bits");
  uint64_t cur = mem_scan(tau, offset, k);
  uint64_t flip = cur ^ target;
  if (flip == 0) return std::nullopt;
  tau.flip(offset + flip);
  return flip;
}

MemBlock MemBlock::zeros(unsigned k) {
  if (k < 1 || k > kMaxK) throw ParamError("block exponent k out of range");
  return MemBlock{k, BitVec(size_t{1} << k)};
}

MemBlock MemBlock::from(unsigned k, BitVec bits) {
  if (k < 1 || k > kMaxK) throw ParamError("block exponent k out of range");
  if (bits.size() != (size_t{1} << k)) throw ParamError("block length must be exactly 2^k");
  return MemBlock{k, std::move(bits)};
}

uint64_t mem(const MemBlock& block) { return mem_scan(block.tau, 0, block.k); }

std::optional<uint64_t> steer(MemBlock& block, uint64_t target) {
  return steer_to(block.tau, 0, block.k, target);
}

bool verify_revert(const MemBlock& initial, const FlipLog& log) {
  MemBlock cur = initial;
  uint64_t m0 = mem(cur);
  uint64_t m = m0;
  for (uint64_t step : log.steps) {
    if (step >= cur.tau.size()) throw FormatError("flip index outside the block");
    cur.tau.flip(step);
    uint64_t next = m ^ step;  // flipping tau[J] XORs J into mem
    if (std::popcount(m ^ next) != 1)
      throw ContractError("log step does not change mem in exactly one bit");
    m = next;
  }
  if (m != mem(cur)) throw Error("internal: incremental mem diverged from scan");
  if (m != m0) return true;  // claim is vacuous until mem returns
  return cur.tau == initial.tau;
}

std::optional<uint64_t> locate_single_error(uint64_t before, uint64_t after) {
  if (before == after) return std::nullopt;
  return before ^ after;
}

}  // namespace catacode::chessboard
