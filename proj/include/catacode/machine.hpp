#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "catacode/bits.hpp"
#include "catacode/meter.hpp"

namespace catacode::machine {

inline constexpr uint64_t kDefaultStepCap = 10'000'000;

enum class Move : uint8_t { Left, Right, Stay };
enum class AuxMode : uint8_t { None, Witness, Random };

// Symbols are the program-text characters: '0', '1' and '_' (blank). Work
// and catalytic cells are always bits; '_' appears only on the input and
// aux tapes, and as a write meaning "leave the cell unchanged".
struct Transition {
  int state = 0;
  char in_sym = '_', work_sym = '0', cat_sym = '0', aux_sym = '-';
  int next_state = 0;
  char work_write = '_', cat_write = '_';
  Move mv_in = Move::Stay, mv_work = Move::Stay, mv_cat = Move::Stay;
  bool aux_advance = false;
};

enum class StateKind : uint8_t { Normal, Accept, Reject };

// Deterministic table machine: read-only input, a work tape of `work_len`
// bits starting all-zero, a catalytic tape of `cat_len` bits, and an
// optional read-once aux tape. One cell per tape is written per step.
struct MachineSpec {
  std::string name;
  uint32_t work_len = 0;
  uint32_t cat_len = 0;
  AuxMode aux_mode = AuxMode::None;
  std::vector<std::string> state_names;
  std::vector<StateKind> state_kinds;
  int start_state = -1;
  std::map<std::tuple<int, char, char, char, char>, Transition> table;

  int state_id(const std::string& name) const;  // -1 when unknown
  bool is_halting(int state) const {
    return state_kinds[state] != StateKind::Normal;
  }

  static MachineSpec parse(std::istream& in);
  static MachineSpec parse_text(const std::string& text);
  static MachineSpec parse_file(const std::string& path);
};

// Machine configuration: tapes, heads, control state. The step counter is
// bookkeeping of the run, not part of the configuration.
struct Configuration {
  int state = 0;
  BitVec work;
  BitVec cat;
  int64_t in_head = 0;    // may rest on the blank cells at -1 and n
  int64_t work_head = 0;  // clamped to [0, work_len)
  int64_t cat_head = 0;   // clamped to [0, cat_len)
  uint64_t aux_head = 0;  // advances only

  bool operator==(const Configuration&) const = default;
};

Configuration start_configuration(const MachineSpec& spec, const BitVec& tau);

// Bit memory the stepper reads and writes; lets a transform back some work
// bits with something other than plain storage.
class BitMemory {
 public:
  virtual ~BitMemory() = default;
  virtual bool read(uint64_t i) = 0;
  virtual void write(uint64_t i, bool v) = 0;
};

class VecMemory final : public BitMemory {
 public:
  explicit VecMemory(BitVec& v) : v_(&v) {}
  bool read(uint64_t i) override { return v_->get(i); }
  void write(uint64_t i, bool v) override { v_->set(i, v); }

 private:
  BitVec* v_;
};

class SliceMemory final : public BitMemory {
 public:
  SliceMemory(BitVec& v, size_t offset) : v_(&v), offset_(offset) {}
  bool read(uint64_t i) override { return v_->get(offset_ + i); }
  void write(uint64_t i, bool v) override { v_->set(offset_ + i, v); }

 private:
  BitVec* v_;
  size_t offset_;
};

struct HeadState {
  int state = 0;
  int64_t in_head = 0, work_head = 0, cat_head = 0;
  uint64_t aux_head = 0;
};

// Applies one transition. Throws StuckMachineError when no transition
// matches; must not be called on a halting state.
void apply_step(const MachineSpec& spec, const BitVec& input, const BitVec* aux,
                HeadState& hs, BitMemory& work, BitMemory& cat);

// Forward step on a full configuration; nullopt on halting configurations.
std::optional<Configuration> step(const MachineSpec& spec, const BitVec& input,
                                  const BitVec* aux, const Configuration& cfg);

// Unique predecessor in the configuration graph, nullopt when in-degree is
// zero. Throws ContractError when two distinct predecessors exist (the
// machine is not reversible). Only for aux-free machines.
std::optional<Configuration> predecessor(const MachineSpec& spec, const BitVec& input,
                                         const Configuration& cfg);

struct RunInput {
  BitVec input;
  BitVec tau;
  std::optional<BitVec> aux;
  uint64_t step_cap = kDefaultStepCap;
};

struct LoopResult {
  int output = 0;
  uint64_t steps = 0;
};

// Runs from the start state until a halting state. Throws StepCapError or
// StuckMachineError.
LoopResult run_loop(const MachineSpec& spec, const BitVec& input, const BitVec* aux,
                    BitMemory& work, BitMemory& cat, uint64_t step_cap);

void check_aux_presence(const MachineSpec& spec, const RunInput& in);

struct SimulationReport {
  int output = 0;  // 1 accept, 0 reject
  uint64_t steps = 0;
  uint64_t hamming_distance = 0;  // final catalytic tape vs initial
  uint64_t peak_meter_bits = 0;
  std::map<std::string, uint64_t> meter_phases;

  // transform-specific audit fields
  uint64_t corrected_symbols = 0;  // bch wrap: size of the applied support
  uint64_t decode_parameter = 0;   // bch wrap: j at which decoding solved
  uint64_t init_flips = 0;         // mem expand: flips introduced by init
  uint64_t cleanup_flips = 0;      // mem expand: flips spent steering back
  uint64_t peak_num_start = 0;     // reversal: counter peak

  BitVec final_tape;
};

// Common surface of the plain runner and the three simulation transforms.
class Runner {
 public:
  virtual ~Runner() = default;
  virtual const MachineSpec& spec() const = 0;
  virtual uint64_t tape_len() const = 0;
  // Largest final-tape Hamming distance the mode tolerates.
  virtual uint64_t contract_budget() const = 0;
  virtual SimulationReport run(const RunInput& in, meter::Meter* meter = nullptr) const = 0;
};

// Direct execution with error accounting; budget is the declared e of the
// lossy machine (0 for a clean one).
class PlainRunner final : public Runner {
 public:
  PlainRunner(MachineSpec spec, uint64_t budget);

  const MachineSpec& spec() const override { return spec_; }
  uint64_t tape_len() const override { return spec_.cat_len; }
  uint64_t contract_budget() const override { return budget_; }
  SimulationReport run(const RunInput& in, meter::Meter* meter = nullptr) const override;

 private:
  MachineSpec spec_;
  uint64_t budget_;
};

}  // namespace catacode::machine
