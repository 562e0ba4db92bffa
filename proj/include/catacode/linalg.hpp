#pragma once

#include <span>
#include <vector>

#include "catacode/gf2r.hpp"
#include "catacode/meter.hpp"

namespace catacode::linalg {

using gf2r::FieldCtx;
using gf2r::Symbol;

class Matrix {
 public:
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw ParamError("matrix dimensions must be positive");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Symbol& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  Symbol at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<Symbol> entries_;
};

struct LinSystem {
  Matrix a;
  std::vector<Symbol> b;
};

inline constexpr int kMaxSystemSize = 64;

// Gaussian elimination over the field; row swaps cost no sign in
// characteristic 2. Matches the cofactor-expansion oracle.
Symbol determinant(const FieldCtx& ctx, const Matrix& m, meter::Meter* meter = nullptr);

// Cramer's rule: x_i = det(A with column i := b) / det(A).
// Throws SingularSystemError when det(A) = 0.
std::vector<Symbol> solve_cramer(const FieldCtx& ctx, const LinSystem& sys,
                                 meter::Meter* meter = nullptr);

// t x t matrix with entry(i, j) = nodes[j]^(first_power + i). Nodes must be
// distinct and nonzero, which makes the matrix invertible.
Matrix vandermonde(const FieldCtx& ctx, std::span<const Symbol> nodes, int first_power,
                   int count);

}  // namespace catacode::linalg
