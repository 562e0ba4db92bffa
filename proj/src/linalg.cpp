#include "catacode/linalg.hpp"

#include <utility>

#include "catacode/bits.hpp"

namespace catacode::linalg {

using gf2r::add;
using gf2r::inverse;
using gf2r::kOne;
using gf2r::kZero;
using gf2r::mul;

Symbol determinant(const FieldCtx& ctx, const Matrix& m, meter::Meter* meter) {
  if (m.rows() != m.cols()) throw ParamError("determinant of a non-square matrix");
  int t = m.rows();
  if (t > kMaxSystemSize) throw ParamError("system size above supported limit");
  // Register accounting mirrors the paper's method: one t*r-bit product
  // polynomial plus a position counter.
  auto reg = meter::alloc_if(meter, static_cast<uint64_t>(t) * ctx.r);
  auto counter = meter::alloc_if(meter, ceil_log2(static_cast<uint64_t>(t) + 1) + 1);

  Matrix w = m;
  Symbol det = kOne;
  for (int col = 0; col < t; ++col) {
    int pivot = -1;
    for (int row = col; row < t; ++row) {
      if (!(w.at(row, col) == kZero)) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return kZero;
    if (pivot != col) {
      for (int j = col; j < t; ++j) std::swap(w.at(pivot, j), w.at(col, j));
    }
    Symbol p = w.at(col, col);
    det = mul(ctx, det, p);
    Symbol pinv = inverse(ctx, p);
    for (int row = col + 1; row < t; ++row) {
      Symbol factor = mul(ctx, w.at(row, col), pinv);
      if (factor == kZero) continue;
      for (int j = col; j < t; ++j) {
        w.at(row, j) = add(ctx, w.at(row, j), mul(ctx, factor, w.at(col, j)));
      }
    }
  }
  return det;
}

std::vector<Symbol> solve_cramer(const FieldCtx& ctx, const LinSystem& sys,
                                 meter::Meter* meter) {
  const Matrix& a = sys.a;
  if (a.rows() != a.cols()) throw ParamError("solve needs a square system");
  if (static_cast<size_t>(a.rows()) != sys.b.size())
    throw ParamError("right-hand side length does not match the system");
  int t = a.rows();

  auto solution_reg = meter::alloc_if(meter, static_cast<uint64_t>(t) * ctx.r);
  auto temps_reg = meter::alloc_if(meter, 5ull * ctx.r);

  Symbol det = determinant(ctx, a, meter);
  if (det == kZero) throw SingularSystemError("singular linear system");
  Symbol det_inv = inverse(ctx, det);

  std::vector<Symbol> x(t);
  Matrix ai = a;
  for (int i = 0; i < t; ++i) {
    for (int row = 0; row < t; ++row) ai.at(row, i) = sys.b[row];
    x[i] = mul(ctx, determinant(ctx, ai, meter), det_inv);
    for (int row = 0; row < t; ++row) ai.at(row, i) = a.at(row, i);
  }
  return x;
}

Matrix vandermonde(const FieldCtx& ctx, std::span<const Symbol> nodes, int first_power,
                   int count) {
  if (count <= 0 || nodes.size() != static_cast<size_t>(count))
    throw ParamError("vandermonde needs exactly `count` nodes");
  if (first_power < 0) throw ParamError("vandermonde powers must be non-negative");
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == kZero) throw ParamError("vandermonde node is zero");
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) throw ParamError("duplicate vandermonde node");
    }
  }
  Matrix m(count, count);
  for (int j = 0; j < count; ++j) {
    Symbol v = gf2r::pow(ctx, nodes[j], static_cast<uint64_t>(first_power));
    for (int i = 0; i < count; ++i) {
      m.at(i, j) = v;
      v = mul(ctx, v, nodes[j]);
    }
  }
  return m;
}

}  // namespace catacode::linalg
