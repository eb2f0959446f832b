#pragma once

#include <vector>

#include "crystals/ratfun.hpp"

namespace crystals::roots {

using crystals::alg::CtxPtr;
using crystals::alg::Rat;
using crystals::alg::RF;

// Dense square matrix of exact rational functions.
class Matrix {
public:
  Matrix() = default;
  Matrix(CtxPtr ctx, int n);  // zero matrix

  static Matrix identity(const CtxPtr& ctx, int n);
  static Matrix diagonal(const std::vector<RF>& d);
  // Integer matrix lifted to rational functions.
  static Matrix from_int(const CtxPtr& ctx,
                         const std::vector<std::vector<int>>& m);

  int n() const { return static_cast<int>(rows_.size()); }
  const CtxPtr& ctx() const { return ctx_; }
  RF& at(int i, int j) { return rows_[i][j]; }
  const RF& at(int i, int j) const { return rows_[i][j]; }

  Matrix operator*(const Matrix& b) const;
  bool operator==(const Matrix& b) const { return rows_ == b.rows_; }

  RF det() const;                 // cofactor expansion
  Matrix adjugate() const;
  Matrix inverse() const;         // adj / det; throws on det == 0
  Matrix transpose() const;
  std::vector<RF> diagonal_entries() const;

  // Leading principal k x k minor.
  RF principal_minor(int k) const;

  // Substitute variables in every entry.
  Matrix substitute(const std::map<int, RF>& assignment) const;

private:
  CtxPtr ctx_;
  std::vector<std::vector<RF>> rows_;
};

// Triangular factorization g = left * diag(d) * right with unitriangular
// outer factors; throws internal_error when a required principal minor
// vanishes.
struct GaussFactors {
  Matrix left;
  std::vector<RF> d;
  Matrix right;
};

// left lower-unitriangular, right upper-unitriangular (classical LDU).
GaussFactors ldu(const Matrix& g);

// left upper-unitriangular, right lower-unitriangular, obtained from the
// LDU of the reversal-conjugated matrix.
GaussFactors udl(const Matrix& g);

}  // namespace crystals::roots
