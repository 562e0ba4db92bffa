#pragma once

#include <cstdint>
#include <string>

#include "catacode/errors.hpp"

namespace catacode::gf2r {

// Polynomial over GF(2), coefficients packed into a word, constant term in
// bit 0. Degrees up to 63; field work never exceeds degree 2*24.
struct Poly2 {
  uint64_t bits = 0;

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return bits == 0; }
  bool operator==(const Poly2&) const = default;

  std::string to_string() const;  // e.g. "x^3+x+1"
};

Poly2 poly_add(Poly2 a, Poly2 b);
Poly2 poly_mul(Poly2 a, Poly2 b);
// Remainder of a by divisor, eliminating the leading coefficient of a
// working copy per iteration. Throws ParamError on a zero divisor.
Poly2 poly_rem(Poly2 numerator, Poly2 divisor);
// Lexicographically smallest monic irreducible polynomial of degree r.
Poly2 find_irreducible(int r);

// Element of GF(2^r), value is a Poly2 of degree < r under the owning
// FieldCtx's modulus.
struct Symbol {
  uint32_t bits = 0;
  bool operator==(const Symbol&) const = default;
};

inline constexpr Symbol kZero{0};
inline constexpr Symbol kOne{1};

// Supported extension degrees. Exhaustive operations are O(2^r), so the
// range is capped at desk scale.
inline constexpr int kMinR = 2;
inline constexpr int kMaxR = 24;

struct FieldCtx {
  int r = 0;
  Poly2 modulus;
  Symbol generator;  // xi, with verified multiplicative order 2^r - 1

  uint64_t order() const { return (uint64_t{1} << r) - 1; }  // |F*|
};

// Builds GF(2^r): walks irreducible moduli in lexicographic order and keeps
// the first one under which xi generates the full multiplicative group.
FieldCtx make_field(int r);

Symbol add(const FieldCtx& ctx, Symbol a, Symbol b);
Symbol mul(const FieldCtx& ctx, Symbol a, Symbol b);
// Iterated multiplication, the space-first choice.
Symbol pow(const FieldCtx& ctx, Symbol a, uint64_t n);
// a^(2^r - 2) by square and multiply. Throws ParamError for a = 0.
Symbol inverse(const FieldCtx& ctx, Symbol a);
// Tries every y until a*y = 1; kept as the independent oracle for inverse.
Symbol inverse_exhaustive(const FieldCtx& ctx, Symbol a);

}  // namespace catacode::gf2r
