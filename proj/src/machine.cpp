#include "catacode/machine.hpp"

#include <fstream>
#include <sstream>

#include "catacode/errors.hpp"

namespace catacode::machine {

namespace {

bool is_bit_sym(char c) { return c == '0' || c == '1'; }
bool is_read_sym(char c) { return c == '0' || c == '1' || c == '_'; }

Move parse_move(char c) {
  switch (c) {
    case 'L': return Move::Left;
    case 'R': return Move::Right;
    case 'S': return Move::Stay;
    default: throw FormatError(std::string("bad head move '") + c + "'");
  }
}

int64_t moved(Move m, int64_t pos, int64_t lo, int64_t hi) {
  switch (m) {
    case Move::Left: return pos > lo ? pos - 1 : lo;
    case Move::Right: return pos < hi ? pos + 1 : hi;
    default: return pos;
  }
}

char input_sym(const BitVec& input, int64_t pos) {
  if (pos < 0 || pos >= static_cast<int64_t>(input.size())) return '_';
  return input.get(static_cast<size_t>(pos)) ? '1' : '0';
}

char aux_sym_at(const BitVec* aux, uint64_t pos) {
  if (aux == nullptr || pos >= aux->size()) return '_';
  return aux->get(pos) ? '1' : '0';
}

}  // namespace

int MachineSpec::state_id(const std::string& s) const {
  for (size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == s) return static_cast<int>(i);
  return -1;
}

MachineSpec MachineSpec::parse(std::istream& in) {
  MachineSpec spec;
  bool saw_machine = false, saw_tapes = false;
  struct PendingTrans {
    std::string src, dst, lhs, writes, moves;
    int line;
  };
  std::vector<PendingTrans> pending;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw FormatError("line " + std::to_string(lineno) + ": " + msg);
    };

    if (kw == "machine") {
      if (saw_machine) fail("duplicate machine line");
      if (!(ls >> spec.name)) fail("machine needs a name");
      saw_machine = true;
    } else if (kw == "tapes") {
      if (saw_tapes) fail("duplicate tapes line");
      std::string field;
      bool have_work = false, have_cat = false;
      while (ls >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) fail("tapes fields look like key=value");
        std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "work") {
          spec.work_len = static_cast<uint32_t>(std::stoul(val));
          have_work = true;
        } else if (key == "cat") {
          spec.cat_len = static_cast<uint32_t>(std::stoul(val));
          have_cat = true;
        } else if (key == "aux") {
          if (val == "none")
            spec.aux_mode = AuxMode::None;
          else if (val == "witness")
            spec.aux_mode = AuxMode::Witness;
          else if (val == "random")
            spec.aux_mode = AuxMode::Random;
          else
            fail("aux must be none, witness or random");
        } else {
          fail("unknown tapes field " + key);
        }
      }
      if (!have_work || !have_cat) fail("tapes needs work= and cat=");
      if (spec.work_len < 1) fail("work tape needs at least one bit");
      if (spec.cat_len < 1) fail("catalytic tape needs at least one bit");
      saw_tapes = true;
    } else if (kw == "state") {
      std::string name, tag;
      if (!(ls >> name)) fail("state needs a name");
      if (spec.state_id(name) >= 0) fail("duplicate state " + name);
      StateKind kind = StateKind::Normal;
      bool is_start = false;
      while (ls >> tag) {
        if (tag == "start")
          is_start = true;
        else if (tag == "accept")
          kind = StateKind::Accept;
        else if (tag == "reject")
          kind = StateKind::Reject;
        else
          fail("unknown state tag " + tag);
      }
      spec.state_names.push_back(name);
      spec.state_kinds.push_back(kind);
      if (is_start) {
        if (spec.start_state >= 0) fail("two start states");
        spec.start_state = static_cast<int>(spec.state_names.size()) - 1;
      }
    } else if (kw == "trans") {
      PendingTrans p;
      p.line = lineno;
      std::string arrow;
      if (!(ls >> p.src >> p.lhs >> arrow >> p.dst >> p.writes >> p.moves) || arrow != "->")
        fail("trans syntax: trans <state> <lhs> -> <state> <writes> <moves>");
      pending.push_back(std::move(p));
    } else {
      fail("unknown directive " + kw);
    }
  }

  if (!saw_machine) throw FormatError("missing machine line");
  if (!saw_tapes) throw FormatError("missing tapes line");
  if (spec.start_state < 0) throw FormatError("no start state declared");

  unsigned lhs_len = spec.aux_mode == AuxMode::None ? 3 : 4;
  for (const PendingTrans& p : pending) {
    auto fail = [&](const std::string& msg) -> void {
      throw FormatError("line " + std::to_string(p.line) + ": " + msg);
    };
    Transition t;
    t.state = spec.state_id(p.src);
    t.next_state = spec.state_id(p.dst);
    if (t.state < 0) fail("unknown state " + p.src);
    if (t.next_state < 0) fail("unknown state " + p.dst);
    if (spec.is_halting(t.state)) fail("transition out of a halting state");
    if (p.lhs.size() != lhs_len) fail("lhs needs exactly " + std::to_string(lhs_len) + " symbols");
    t.in_sym = p.lhs[0];
    t.work_sym = p.lhs[1];
    t.cat_sym = p.lhs[2];
    t.aux_sym = lhs_len == 4 ? p.lhs[3] : '-';
    if (!is_read_sym(t.in_sym)) fail("input symbol must be 0, 1 or _");
    if (!is_bit_sym(t.work_sym) || !is_bit_sym(t.cat_sym))
      fail("work and catalytic cells hold bits, so reads must be 0 or 1");
    if (lhs_len == 4 && !is_read_sym(t.aux_sym)) fail("aux symbol must be 0, 1 or _");
    if (p.writes.size() != 2) fail("writes are two symbols, work then cat");
    t.work_write = p.writes[0];
    t.cat_write = p.writes[1];
    if (!is_read_sym(t.work_write) || !is_read_sym(t.cat_write))
      fail("writes must be 0, 1 or _ (unchanged)");
    if (p.moves.size() != 3 && p.moves.size() != 4) fail("moves are three of L/R/S, then optional A");
    t.mv_in = parse_move(p.moves[0]);
    t.mv_work = parse_move(p.moves[1]);
    t.mv_cat = parse_move(p.moves[2]);
    if (p.moves.size() == 4) {
      if (p.moves[3] != 'A') fail("the fourth move flag can only be A");
      if (spec.aux_mode == AuxMode::None) fail("aux advance on a machine without an aux tape");
      t.aux_advance = true;
    }
    auto key = std::make_tuple(t.state, t.in_sym, t.work_sym, t.cat_sym, t.aux_sym);
    if (!spec.table.emplace(key, t).second) fail("duplicate transition for this configuration");
  }
  return spec;
}

MachineSpec MachineSpec::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

MachineSpec MachineSpec::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open program file " + path);
  return parse(in);
}

Configuration start_configuration(const MachineSpec& spec, const BitVec& tau) {
  if (tau.size() != spec.cat_len) throw ParamError("catalytic tape length does not match program");
  Configuration cfg;
  cfg.state = spec.start_state;
  cfg.work = BitVec(spec.work_len);
  cfg.cat = tau;
  return cfg;
}

void apply_step(const MachineSpec& spec, const BitVec& input, const BitVec* aux,
                HeadState& hs, BitMemory& work, BitMemory& cat) {
  char in_c = input_sym(input, hs.in_head);
  char work_c = work.read(static_cast<uint64_t>(hs.work_head)) ? '1' : '0';
  char cat_c = cat.read(static_cast<uint64_t>(hs.cat_head)) ? '1' : '0';
  char aux_c = spec.aux_mode == AuxMode::None ? '-' : aux_sym_at(aux, hs.aux_head);

  auto it = spec.table.find(std::make_tuple(hs.state, in_c, work_c, cat_c, aux_c));
  if (it == spec.table.end()) {
    throw StuckMachineError("no transition from state " + spec.state_names[hs.state] +
                            " on '" + in_c + work_c + cat_c +
                            (spec.aux_mode == AuxMode::None ? std::string() : std::string(1, aux_c)) +
                            "'");
  }
  const Transition& t = it->second;
  if (t.work_write != '_') work.write(static_cast<uint64_t>(hs.work_head), t.work_write == '1');
  if (t.cat_write != '_') cat.write(static_cast<uint64_t>(hs.cat_head), t.cat_write == '1');
  hs.state = t.next_state;
  hs.in_head = moved(t.mv_in, hs.in_head, -1, static_cast<int64_t>(input.size()));
  hs.work_head = moved(t.mv_work, hs.work_head, 0, static_cast<int64_t>(spec.work_len) - 1);
  hs.cat_head = moved(t.mv_cat, hs.cat_head, 0, static_cast<int64_t>(spec.cat_len) - 1);
  if (t.aux_advance) ++hs.aux_head;
}

std::optional<Configuration> step(const MachineSpec& spec, const BitVec& input,
                                  const BitVec* aux, const Configuration& cfg) {
  if (spec.is_halting(cfg.state)) return std::nullopt;
  Configuration next = cfg;
  HeadState hs{next.state, next.in_head, next.work_head, next.cat_head, next.aux_head};
  VecMemory work(next.work), cat(next.cat);
  apply_step(spec, input, aux, hs, work, cat);
  next.state = hs.state;
  next.in_head = hs.in_head;
  next.work_head = hs.work_head;
  next.cat_head = hs.cat_head;
  next.aux_head = hs.aux_head;
  return next;
}

std::optional<Configuration> predecessor(const MachineSpec& spec, const BitVec& input,
                                         const Configuration& cfg) {
  if (spec.aux_mode != AuxMode::None)
    throw ParamError("predecessor search supports only aux-free machines");

  auto undo = [](Move m, int64_t pos, int64_t lo, int64_t hi) {
    std::vector<int64_t> prev;
    switch (m) {
      case Move::Stay:
        prev.push_back(pos);
        break;
      case Move::Right:
        if (pos - 1 >= lo) prev.push_back(pos - 1);
        if (pos == hi) prev.push_back(pos);  // clamped move
        break;
      case Move::Left:
        if (pos + 1 <= hi) prev.push_back(pos + 1);
        if (pos == lo) prev.push_back(pos);
        break;
    }
    return prev;
  };

  std::optional<Configuration> found;
  for (const auto& [key, t] : spec.table) {
    if (t.next_state != cfg.state) continue;
    for (int64_t pi : undo(t.mv_in, cfg.in_head, -1, static_cast<int64_t>(input.size()))) {
      if (input_sym(input, pi) != t.in_sym) continue;
      for (int64_t pw :
           undo(t.mv_work, cfg.work_head, 0, static_cast<int64_t>(spec.work_len) - 1)) {
        for (int64_t pc :
             undo(t.mv_cat, cfg.cat_head, 0, static_cast<int64_t>(spec.cat_len) - 1)) {
          Configuration cand = cfg;
          cand.state = t.state;
          cand.in_head = pi;
          cand.work_head = pw;
          cand.cat_head = pc;
          cand.work.set(static_cast<size_t>(pw), t.work_sym == '1');
          cand.cat.set(static_cast<size_t>(pc), t.cat_sym == '1');
          if (spec.is_halting(cand.state)) continue;
          auto fwd = step(spec, input, nullptr, cand);
          if (!fwd || !(*fwd == cfg)) continue;
          if (found && !(*found == cand))
            throw ContractError("configuration has two predecessors; machine is not reversible");
          found = std::move(cand);
        }
      }
    }
  }
  return found;
}

LoopResult run_loop(const MachineSpec& spec, const BitVec& input, const BitVec* aux,
                    BitMemory& work, BitMemory& cat, uint64_t step_cap) {
  HeadState hs;
  hs.state = spec.start_state;
  LoopResult res;
  while (!spec.is_halting(hs.state)) {
    if (res.steps >= step_cap) throw StepCapError("step cap exceeded");
    apply_step(spec, input, aux, hs, work, cat);
    ++res.steps;
  }
  res.output = spec.state_kinds[hs.state] == StateKind::Accept ? 1 : 0;
  return res;
}

void check_aux_presence(const MachineSpec& spec, const RunInput& in) {
  if ((spec.aux_mode != AuxMode::None) != in.aux.has_value())
    throw ParamError("aux tape must be supplied exactly when the machine declares one");
}

PlainRunner::PlainRunner(MachineSpec spec, uint64_t budget)
    : spec_(std::move(spec)), budget_(budget) {}

SimulationReport PlainRunner::run(const RunInput& in, meter::Meter* meter) const {
  check_aux_presence(spec_, in);
  BitVec tau = in.tau;
  if (tau.size() != spec_.cat_len) throw ParamError("catalytic tape length does not match program");

  SimulationReport rep;
  {
    std::optional<meter::Meter::Scope> sc;
    if (meter) sc.emplace(meter->scope("run"));
    auto out_reg = meter::alloc_if(meter, 1);

    BitVec work(spec_.work_len);
    VecMemory work_mem(work), cat_mem(tau);
    const BitVec* aux = in.aux ? &*in.aux : nullptr;
    LoopResult res = run_loop(spec_, in.input, aux, work_mem, cat_mem, in.step_cap);
    rep.output = res.output;
    rep.steps = res.steps;
  }
  rep.hamming_distance = tau.hamming_distance(in.tau);
  rep.final_tape = std::move(tau);
  if (meter) {
    rep.meter_phases = meter->report();
    rep.peak_meter_bits = meter->peak_bits();
  }
  return rep;
}

}  // namespace catacode::machine
