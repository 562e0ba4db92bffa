#pragma once

#include <functional>
#include <optional>

#include "catacode/bch.hpp"
#include "catacode/chessboard.hpp"
#include "catacode/machine.hpp"

namespace catacode::machine {

// ---------------------------------------------------------------------------
// Lossy machine wrapped in the BCH codec: encode the tape, run the inner
// machine on the data portion, decode and correct, leaving the tape exact.

class BchWrapRunner final : public Runner {
 public:
  BchWrapRunner(MachineSpec spec, uint32_t e);

  const MachineSpec& spec() const override { return spec_; }
  const bch::BchCodec& codec() const { return codec_; }
  uint64_t tape_len() const override { return spec_.cat_len; }
  uint64_t contract_budget() const override { return 0; }
  SimulationReport run(const RunInput& in, meter::Meter* meter = nullptr) const override;

 private:
  MachineSpec spec_;
  bch::BchCodec codec_;
};

// ---------------------------------------------------------------------------
// Clean machine given extra virtual work bits backed by mem blocks carved
// out of an enlarged catalytic tape.

struct ExpandLayout {
  uint32_t blocks = 0;  // B
  uint32_t k = 0;       // each block spans 2^k tape bits

  // B = e blocks of c bits; block size rounds down to a power of two when
  // c is not one.
  static ExpandLayout main_rev_easy(uint32_t c, uint32_t e);
  // Many small blocks: k = ceil(log2(c) / (delta_hat * e)) and just enough
  // blocks to cover e*log2(c) virtual bits. delta_hat >= 2 tunes how far
  // the extra tape shrinks relative to c.
  static ExpandLayout main_rev(uint32_t c, uint32_t e, uint32_t delta_hat);

  uint64_t block_bits() const { return uint64_t{1} << k; }
  uint64_t extra_bits() const { return blocks * block_bits(); }
  uint64_t capacity_bits() const { return static_cast<uint64_t>(blocks) * k; }
};

// B mem blocks living at `offset` in a shared tape; each holds k virtual
// bits steered by single flips. mem values are cached and kept in sync
// with every flip; mem_scan over the block is the ground truth.
class BlockStore {
 public:
  BlockStore(BitVec& tape, size_t offset, ExpandLayout layout);

  // Steers every block's mem to zero, at most one flip per block.
  uint64_t init();
  // Steers every mem back to zero one bit at a time.
  uint64_t cleanup();

  bool read(uint64_t vbit) const;
  void write(uint64_t vbit, bool v);

  uint64_t capacity() const { return layout_.capacity_bits(); }
  const ExpandLayout& layout() const { return layout_; }
  uint64_t mem_value(uint32_t block) const { return mem_[block]; }

 private:
  size_t block_base(uint32_t block) const { return offset_ + block * layout_.block_bits(); }

  BitVec* tape_;
  size_t offset_;
  ExpandLayout layout_;
  std::vector<uint64_t> mem_;
};

class ExpandRunner final : public Runner {
 public:
  // Backs the top `virtual_bits` of the machine's work tape with mem
  // blocks; by default as many as layout capacity and work length allow.
  ExpandRunner(MachineSpec spec, ExpandLayout layout,
               std::optional<uint64_t> virtual_bits = std::nullopt);

  const MachineSpec& spec() const override { return spec_; }
  const ExpandLayout& layout() const { return layout_; }
  uint64_t virtual_bits() const { return virtual_bits_; }
  uint64_t tape_len() const override { return spec_.cat_len + layout_.extra_bits(); }
  uint64_t contract_budget() const override { return layout_.blocks; }
  SimulationReport run(const RunInput& in, meter::Meter* meter = nullptr) const override;

 private:
  MachineSpec spec_;
  ExpandLayout layout_;
  uint64_t virtual_bits_;
};

// ---------------------------------------------------------------------------
// Reversal counting: run forward counting start states, then run backward
// decrementing, halting at the start state where the counter reaches zero.

struct ReversibleHooks {
  std::function<std::optional<Configuration>(const Configuration&)> forward;
  std::function<std::optional<Configuration>(const Configuration&)> backward;
  std::function<bool(const Configuration&)> is_start;
};

// Hooks derived from the transition table: forward is the stepper, backward
// enumerates the unique predecessor.
ReversibleHooks table_hooks(const MachineSpec& spec, const BitVec& input);

using HooksFactory = std::function<ReversibleHooks(const MachineSpec&, const BitVec& input)>;

class ReversalRunner final : public Runner {
 public:
  ReversalRunner(MachineSpec spec, uint32_t e, HooksFactory hooks_factory = nullptr);

  const MachineSpec& spec() const override { return spec_; }
  uint64_t tape_len() const override { return spec_.cat_len; }
  uint64_t contract_budget() const override { return 0; }
  SimulationReport run(const RunInput& in, meter::Meter* meter = nullptr) const override;

 private:
  MachineSpec spec_;
  uint32_t e_;
  HooksFactory hooks_factory_;
};

// Counter width the reversal simulation meters: enough bits to count every
// start tape within Hamming distance e, capped by (e+1)*ceil(log2 c).
uint64_t reversal_counter_width(uint32_t c, uint32_t e);

// ---------------------------------------------------------------------------
// Read-once witness enumeration over any runner.

struct WitnessReport {
  bool accepted = false;
  uint64_t witnesses_tried = 0;
  uint64_t contract_violations = 0;
  uint64_t max_distance = 0;
  std::optional<BitVec> first_accepting;
  std::optional<BitVec> first_violating;
};

// Tries every witness of length 0..max_len in canonical order and checks
// the runner's tape contract on each one, accepting or not.
WitnessReport enumerate_witnesses(const Runner& runner, const BitVec& input, const BitVec& tau,
                                  unsigned max_len, uint64_t step_cap = kDefaultStepCap);

}  // namespace catacode::machine
