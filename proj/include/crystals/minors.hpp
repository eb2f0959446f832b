#pragma once

#include "crystals/matrix.hpp"
#include "crystals/weyl.hpp"

namespace crystals::roots {

// One-parameter unipotent generators of GL_n (1-based i):
// x_i(a) = I + a E_{i,i+1}, y_i(a) = I + a E_{i+1,i}.
Matrix x_plus(const CtxPtr& ctx, int n, int i, const RF& a);
Matrix x_minus(const CtxPtr& ctx, int n, int i, const RF& a);

// Chart factor used by toric parametrizations of Bruhat cells:
// phi_i applied to [[c^-1, 0], [1, c]].
Matrix chart_factor(const CtxPtr& ctx, int n, int i, const RF& c);

// Standard representative s_i bar = x_i(-1) y_i(1) x_i(-1): the identity
// with the 2x2 block [[0,-1],[1,0]] at rows/columns i-1, i.
Matrix sbar(const CtxPtr& ctx, int n, int i);
Matrix sbar_inv(const CtxPtr& ctx, int n, int i);

// w bar = product of s_i bar over a reduced word of w (well defined by
// the braid relations), and its inverse.
Matrix wbar(const CtxPtr& ctx, const Perm& w);
Matrix wbar_inv(const CtxPtr& ctx, const Perm& w);

// Generalized minor Delta_{u omega_i, v omega_i}(g): the i x i leading
// principal minor of ubar^-1 * g * vbar (i = n gives det).
RF generalized_minor(const Matrix& g, const Perm& u, const Perm& v, int i);

// Positive-inverse anti-automorphism iota(g) = D adj(g) D / det(g),
// D = diag((-1)^i); fixes x_i(a), y_i(a), inverts the torus.
Matrix iota(const Matrix& g);

// Standard regular character chi^st(u) = sum of the first superdiagonal.
RF chi_st(const Matrix& g);

}  // namespace crystals::roots
