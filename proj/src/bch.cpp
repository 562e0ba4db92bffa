#include "catacode/bch.hpp"

#include <algorithm>
#include <cmath>

#include "catacode/linalg.hpp"

namespace catacode::bch {

using gf2r::add;
using gf2r::inverse;
using gf2r::kOne;
using gf2r::kZero;
using gf2r::mul;

CodecParams CodecParams::make(uint32_t c, uint32_t e) {
  if (c < 2) throw ParamError("tape must hold at least 2 bits");
  if (e < 1) throw ParamError("error budget must be at least 1");
  if (static_cast<double>(e) > c / (2.0 * std::log2(static_cast<double>(c))))
    throw ParamError("error budget exceeds c / (2 log2 c)");
  uint64_t ce = static_cast<uint64_t>(c) + e;
  if (ce > (uint64_t{1} << gf2r::kMaxR)) throw ParamError("tape too long for supported fields");
  CodecParams p;
  p.c = c;
  p.e = e;
  p.r = ceil_log2(ce);
  p.delta = 2 * e + 1;
  p.n_data = (c + p.r - 1) / p.r;
  p.pad_bits = p.n_data * p.r - c;
  if (static_cast<uint64_t>(p.n_total()) > (uint64_t{1} << p.r) - 1)
    throw ParamError("not enough field indices for all codeword positions");
  return p;
}

std::vector<Symbol> Codeword::word() const {
  std::vector<Symbol> w = data;
  w.insert(w.end(), checks.begin(), checks.end());
  return w;
}

bool Syndrome::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](Symbol s) { return s == kZero; });
}

BchCodec::BchCodec(CodecParams params) : params_(params), field_(gf2r::make_field(params.r)) {}

Symbol BchCodec::index_of(uint32_t pos) const {
  if (pos >= params_.n_total()) throw ParamError("codeword position out of range");
  return gf2r::pow(field_, field_.generator, pos + 1);
}

std::vector<Symbol> BchCodec::pack_tape(const BitVec& tape) const {
  if (tape.size() != params_.c) throw ParamError("tape length does not match codec");
  std::vector<Symbol> data(params_.n_data);
  for (uint32_t j = 0; j < params_.n_data; ++j) {
    unsigned n = static_cast<unsigned>(
        std::min<uint64_t>(params_.r, params_.c - static_cast<uint64_t>(j) * params_.r));
    data[j] = Symbol{static_cast<uint32_t>(tape.read_word(static_cast<size_t>(j) * params_.r, n))};
  }
  return data;
}

BitVec BchCodec::unpack_data(std::span<const Symbol> data) const {
  if (data.size() != params_.n_data) throw ParamError("data symbol count does not match codec");
  if (params_.pad_bits > 0) {
    uint32_t pad_mask = ((uint32_t{1} << params_.pad_bits) - 1)
                        << (params_.r - params_.pad_bits);
    if (data.back().bits & pad_mask)
      throw UncorrectableError("padding bits of the last data symbol are not zero");
  }
  BitVec tape(params_.c);
  for (uint32_t j = 0; j < params_.n_data; ++j) {
    unsigned n = static_cast<unsigned>(
        std::min<uint64_t>(params_.r, params_.c - static_cast<uint64_t>(j) * params_.r));
    tape.write_word(static_cast<size_t>(j) * params_.r, n, data[j].bits);
  }
  return tape;
}

// sum over positions of sym[pos] * (g^i)^(pos+1); one multiplication per
// position once g^i is formed.
Symbol BchCodec::power_sum(std::span<const Symbol> symbols, uint32_t i) const {
  Symbol gi = gf2r::pow(field_, field_.generator, i);
  Symbol running = kOne;
  Symbol acc = kZero;
  for (const Symbol& s : symbols) {
    running = mul(field_, running, gi);
    if (!(s == kZero)) acc = add(field_, acc, mul(field_, s, running));
  }
  return acc;
}

Symbol BchCodec::compute_syndrome(std::span<const Symbol> word, uint32_t i) const {
  if (i < 1 || i > params_.delta - 1) throw ParamError("syndrome index out of range");
  if (word.size() != params_.n_total()) throw ParamError("word length does not match codec");
  return power_sum(word, i);
}

Symbol BchCodec::compute_partial(std::span<const Symbol> data, uint32_t i) const {
  if (i < 1 || i > params_.delta - 1) throw ParamError("syndrome index out of range");
  if (data.size() != params_.n_data) throw ParamError("data length does not match codec");
  return power_sum(data, i);
}

Syndrome BchCodec::syndrome(std::span<const Symbol> word, meter::Meter* meter) const {
  // Five field registers and two delta-range counters, as in the checks
  // computation; the store for the values themselves is metered by callers
  // that keep them.
  auto regs = meter::alloc_if(meter, 6ull * params_.r + 2 * (ceil_log2(params_.delta) + 1));
  Syndrome syn;
  syn.values.resize(params_.delta - 1);
  for (uint32_t i = 1; i < params_.delta; ++i)
    syn.values[i - 1] = compute_syndrome(word, i);
  return syn;
}

Codeword BchCodec::encode(const BitVec& tape, meter::Meter* meter) const {
  std::vector<Symbol> data = pack_tape(tape);
  uint32_t t = 2 * params_.e;

  auto pad_reg = meter::alloc_if(params_.pad_bits > 0 ? meter : nullptr, params_.pad_bits);
  auto spartial_reg = meter::alloc_if(meter, static_cast<uint64_t>(t) * params_.r);
  std::vector<Symbol> rhs(t);
  {
    auto cc_regs =
        meter::alloc_if(meter, 6ull * params_.r + 2 * (ceil_log2(params_.delta) + 1));
    for (uint32_t i = 1; i <= t; ++i) rhs[i - 1] = compute_partial(data, i);
  }

  // Check positions carry indices g^(n_data+1) .. g^(n_data+2e); the
  // encoding system matrix over those nodes is Vandermonde-like and always
  // solvable.
  std::vector<Symbol> nodes(t);
  Symbol running = gf2r::pow(field_, field_.generator, params_.n_data);
  for (uint32_t j = 0; j < t; ++j) {
    running = mul(field_, running, field_.generator);
    nodes[j] = running;
  }
  linalg::Matrix a = linalg::vandermonde(field_, nodes, 1, static_cast<int>(t));
  std::vector<Symbol> checks = linalg::solve_cramer(field_, {a, rhs}, meter);

  return Codeword{params_, std::move(data), std::move(checks)};
}

namespace {

Symbol horner(const FieldCtx& ctx, std::span<const Symbol> coeffs, Symbol z) {
  Symbol acc = kZero;
  for (size_t m = coeffs.size(); m-- > 0;) acc = add(ctx, mul(ctx, acc, z), coeffs[m]);
  return acc;
}

}  // namespace

DecodeResult BchCodec::decode(std::span<const Symbol> word, meter::Meter* meter) const {
  if (word.size() != params_.n_total()) throw ParamError("word length does not match codec");
  const uint32_t two_e = 2 * params_.e;
  const uint32_t r = params_.r;

  auto syn_reg = meter::alloc_if(meter, static_cast<uint64_t>(two_e) * r);
  Syndrome syn = syndrome(word, meter);

  std::vector<Symbol> corrected(word.begin(), word.end());
  if (syn.all_zero()) {
    // No errors detected; nothing to solve.
    std::vector<Symbol> data(corrected.begin(), corrected.begin() + params_.n_data);
    std::vector<Symbol> checks(corrected.begin() + params_.n_data, corrected.end());
    return DecodeResult{Codeword{params_, std::move(data), std::move(checks)}, {}, 0};
  }

  // Decoding linear system with parameter j: unknowns (sigma_1..sigma_t,
  // omega_1..omega_t) for t = j/2, sigma_0 = 1 folded into the right-hand
  // side. Coefficient matching of S(z)sigma(z) = omega(z) mod z^(j+1).
  auto sval = [&](int k) -> Symbol {
    return (k >= 1 && k <= static_cast<int>(two_e)) ? syn.values[k - 1] : kZero;
  };
  auto build = [&](uint32_t j) {
    uint32_t t = j / 2;
    linalg::Matrix a(static_cast<int>(j), static_cast<int>(j));
    std::vector<Symbol> b(j);
    for (uint32_t i = 1; i <= j; ++i) {
      for (uint32_t m = 1; m <= t; ++m)
        a.at(i - 1, m - 1) = sval(static_cast<int>(i) - static_cast<int>(m));
      for (uint32_t l = 1; l <= t; ++l) a.at(i - 1, t + l - 1) = (l == i) ? kOne : kZero;
      b[i - 1] = sval(static_cast<int>(i));
    }
    return linalg::LinSystem{std::move(a), std::move(b)};
  };

  uint32_t j = two_e;
  while (j > 0) {
    linalg::LinSystem sys = build(j);
    if (!(linalg::determinant(field_, sys.a, meter) == kZero)) break;
    j -= 2;
  }
  if (j == 0) {
    // Nonzero syndrome but no solvable locator system at any parameter:
    // outside the promised error ball.
    throw UncorrectableError("syndrome is nonzero but every locator system is singular");
  }

  uint32_t t = j / 2;
  linalg::LinSystem sys = build(j);
  std::vector<Symbol> sol = linalg::solve_cramer(field_, sys, meter);

  std::vector<Symbol> sigma(t + 1), omega(t + 1);
  sigma[0] = kOne;
  omega[0] = kZero;
  for (uint32_t m = 1; m <= t; ++m) {
    sigma[m] = sol[m - 1];
    omega[m] = sol[t + m - 1];
  }
  uint32_t deg_sigma = 0;
  for (uint32_t m = 1; m <= t; ++m)
    if (!(sigma[m] == kZero)) deg_sigma = m;

  // Roots by exhaustive evaluation over F*: z runs through g^0..g^(2^r-2),
  // and a root g^jexp names error position 2^r-2-jexp directly, so no
  // discrete logarithm is ever needed.
  auto support_reg = meter::alloc_if(
      meter, static_cast<uint64_t>(params_.e) * (r + ceil_log2(params_.n_total()) + 1));
  std::vector<std::pair<uint32_t, Symbol>> roots;  // (position, z)
  {
    auto eval_regs = meter::alloc_if(meter, 4ull * r + ceil_log2(two_e) + 1);
    uint64_t group = field_.order();
    Symbol z = kOne;
    for (uint64_t jexp = 0; jexp < group; ++jexp) {
      if (horner(field_, sigma, z) == kZero) {
        uint64_t pos = group - 1 - jexp;
        if (pos >= params_.n_total())
          throw UncorrectableError("error locator root maps outside the codeword");
        roots.emplace_back(static_cast<uint32_t>(pos), z);
      }
      z = mul(field_, z, field_.generator);
    }
  }
  if (roots.size() != deg_sigma)
    throw UncorrectableError("error locator degree does not match its root count");

  ErrorSupport support;
  {
    auto value_regs = meter::alloc_if(meter, 4ull * r);
    std::vector<Symbol> ys(roots.size());  // error indices x = z^-1
    for (size_t i = 0; i < roots.size(); ++i) ys[i] = inverse(field_, roots[i].second);
    for (size_t i = 0; i < roots.size(); ++i) {
      Symbol z = roots[i].second;
      Symbol denom = kOne;
      for (size_t o = 0; o < roots.size(); ++o) {
        if (o == i) continue;
        denom = mul(field_, denom, add(field_, kOne, mul(field_, ys[o], z)));
      }
      Symbol val = mul(field_, horner(field_, omega, z), inverse(field_, denom));
      if (val == kZero) throw UncorrectableError("computed error magnitude is zero");
      uint32_t pos = roots[i].first;
      corrected[pos] = add(field_, corrected[pos], val);
      support.entries.emplace_back(pos, val);
    }
  }
  std::sort(support.entries.begin(), support.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  if (!syndrome(corrected, meter).all_zero())
    throw UncorrectableError("corrected word fails the syndrome re-check");

  std::vector<Symbol> data(corrected.begin(), corrected.begin() + params_.n_data);
  std::vector<Symbol> checks(corrected.begin() + params_.n_data, corrected.end());
  return DecodeResult{Codeword{params_, std::move(data), std::move(checks)},
                      std::move(support), j};
}

BitVec BchCodec::word_to_bits(std::span<const Symbol> word) const {
  if (word.size() != params_.n_total()) throw ParamError("word length does not match codec");
  BitVec bits(params_.codeword_bits());
  for (size_t p = 0; p < word.size(); ++p)
    bits.write_word(p * params_.r, params_.r, word[p].bits);
  return bits;
}

std::vector<Symbol> BchCodec::word_from_bits(const BitVec& bits) const {
  if (bits.size() != params_.codeword_bits())
    throw ParamError("bit length does not match the codeword size");
  std::vector<Symbol> word(params_.n_total());
  for (size_t p = 0; p < word.size(); ++p)
    word[p] = Symbol{static_cast<uint32_t>(bits.read_word(p * params_.r, params_.r))};
  return word;
}

BitVec corrupt(const BitVec& word_bits, std::span<const uint64_t> flips) {
  BitVec out = word_bits;
  for (size_t i = 0; i < flips.size(); ++i) {
    if (flips[i] >= word_bits.size()) throw ParamError("flip position out of range");
    for (size_t j = i + 1; j < flips.size(); ++j)
      if (flips[i] == flips[j]) throw ParamError("duplicate flip position");
    out.flip(flips[i]);
  }
  return out;
}

}  // namespace catacode::bch
