#include "catacode/gf2r.hpp"

#include <bit>
#include <vector>

namespace catacode::gf2r {

int Poly2::degree() const {
  return static_cast<int>(std::bit_width(bits)) - 1;
}

std::string Poly2::to_string() const {
  if (bits == 0) return "0";
  std::string s;
  for (int d = degree(); d >= 0; --d) {
    if (!((bits >> d) & 1)) continue;
    if (!s.empty()) s += "+";
    if (d == 0)
      s += "1";
    else if (d == 1)
      s += "x";
    else
      s += "x^" + std::to_string(d);
  }
  return s;
}

Poly2 poly_add(Poly2 a, Poly2 b) { return Poly2{a.bits ^ b.bits}; }

Poly2 poly_mul(Poly2 a, Poly2 b) {
  int da = a.degree(), db = b.degree();
  if (da >= 0 && db >= 0 && da + db > 63)
    throw ParamError("polynomial product exceeds supported degree");
  uint64_t acc = 0;
  uint64_t bb = b.bits;
  for (uint64_t ab = a.bits; ab != 0; ab &= ab - 1) {
    unsigned sh = static_cast<unsigned>(std::countr_zero(ab));
    acc ^= bb << sh;
  }
  return Poly2{acc};
}

Poly2 poly_rem(Poly2 numerator, Poly2 divisor) {
  if (divisor.is_zero()) throw ParamError("polynomial division by zero");
  int dd = divisor.degree();
  Poly2 n = numerator;
  int dn = n.degree();
  while (dn >= dd) {
    n.bits ^= divisor.bits << (dn - dd);
    dn = n.degree();
  }
  return n;
}

namespace {

// A reducible degree-r polynomial has a factor of degree <= r/2, so the
// candidate-factor loop stops there; the outcome matches testing every
// nontrivial factor.
bool is_irreducible(uint64_t cand, int r) {
  for (uint64_t f = 2; f < (uint64_t{2} << (r / 2)); ++f) {
    if (poly_rem(Poly2{cand}, Poly2{f}).is_zero()) return false;
  }
  return true;
}

}  // namespace

Poly2 find_irreducible(int r) {
  if (r < 2) throw ParamError("irreducible search needs degree >= 2");
  for (uint64_t cand = uint64_t{1} << r; cand < (uint64_t{2} << r); ++cand) {
    if (is_irreducible(cand, r)) return Poly2{cand};
  }
  throw Error("unreachable: irreducible polynomials exist for every degree");
}

Symbol add(const FieldCtx&, Symbol a, Symbol b) { return Symbol{a.bits ^ b.bits}; }

Symbol mul(const FieldCtx& ctx, Symbol a, Symbol b) {
  Poly2 prod = poly_mul(Poly2{a.bits}, Poly2{b.bits});
  return Symbol{static_cast<uint32_t>(poly_rem(prod, ctx.modulus).bits)};
}

Symbol pow(const FieldCtx& ctx, Symbol a, uint64_t n) {
  Symbol acc = kOne;
  for (uint64_t i = 0; i < n; ++i) acc = mul(ctx, acc, a);
  return acc;
}

namespace {

Symbol pow_sq(const FieldCtx& ctx, Symbol a, uint64_t n) {
  Symbol acc = kOne;
  Symbol base = a;
  while (n != 0) {
    if (n & 1) acc = mul(ctx, acc, base);
    base = mul(ctx, base, base);
    n >>= 1;
  }
  return acc;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// ord(xi) = 2^r - 1 iff xi^((2^r-1)/p) != 1 for every prime p | 2^r - 1.
bool xi_generates(const FieldCtx& ctx) {
  uint64_t order = ctx.order();
  for (uint64_t p : prime_factors(order)) {
    if (pow_sq(ctx, ctx.generator, order / p) == kOne) return false;
  }
  return true;
}

}  // namespace

Symbol inverse(const FieldCtx& ctx, Symbol a) {
  if (a == kZero) throw ParamError("zero has no multiplicative inverse");
  return pow_sq(ctx, a, ctx.order() - 1);
}

Symbol inverse_exhaustive(const FieldCtx& ctx, Symbol a) {
  if (a == kZero) throw ParamError("zero has no multiplicative inverse");
  for (uint64_t y = 1; y <= ctx.order(); ++y) {
    Symbol cand{static_cast<uint32_t>(y)};
    if (mul(ctx, a, cand) == kOne) return cand;
  }
  throw Error("unreachable: every nonzero field element has an inverse");
}

FieldCtx make_field(int r) {
  if (r < kMinR || r > kMaxR) throw ParamError("field degree must be in [2, 24]");
  for (uint64_t cand = uint64_t{1} << r; cand < (uint64_t{2} << r); ++cand) {
    if (!is_irreducible(cand, r)) continue;
    FieldCtx ctx{r, Poly2{cand}, Symbol{0b10}};
    if (xi_generates(ctx)) return ctx;
  }
  throw Error("unreachable: a primitive modulus exists for every degree");
}

}  // namespace catacode::gf2r
