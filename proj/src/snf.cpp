#include "plumbsw/snf.hpp"

#include <cstdlib>

namespace plumbsw {

namespace {

// Row ops on M are mirrored on U (left transform) and undone on Uinv, so
// U*A_orig*V = M and U*Uinv = 1 hold at every step. Column ops only touch M
// (the right transform is never needed by callers).
struct Work {
  IMat m, u, uinv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    m.row(i).swap(m.row(j));
    u.row(i).swap(u.row(j));
    uinv.col(i).swap(uinv.col(j));
  }
  void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
    m.row(dst) += f * m.row(src);
    u.row(dst) += f * u.row(src);
    uinv.col(src) -= f * uinv.col(dst);
  }
  void negate_row(int i) {
    m.row(i) = -m.row(i);
    u.row(i) = -u.row(i);
    uinv.col(i) = -uinv.col(i);
  }
  void swap_cols(int i, int j) {
    if (i != j) m.col(i).swap(m.col(j));
  }
  void add_col(int dst, int src, const Int& f) { m.col(dst) += f * m.col(src); }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const IMat& a) {
  const int n = static_cast<int>(a.rows());
  Work w{a, IMat::Identity(n, n), IMat::Identity(n, n)};

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Move a smallest-magnitude nonzero of the trailing block to (t,t).
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (w.m(i, j) != 0 &&
              (pi < 0 || abs_int(w.m(i, j)) < abs_int(w.m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // trailing block is all zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      // One pass of remainder reduction against the pivot. Any surviving
      // remainder is strictly smaller than the pivot, so looping terminates.
      bool clean = true;
      for (int i = t + 1; i < n; ++i)
        if (w.m(i, t) != 0) {
          w.add_row(i, t, -Int(w.m(i, t) / w.m(t, t)));
          if (w.m(i, t) != 0) clean = false;
        }
      for (int j = t + 1; j < n; ++j)
        if (w.m(t, j) != 0) {
          w.add_col(j, t, -Int(w.m(t, j) / w.m(t, t)));
          if (w.m(t, j) != 0) clean = false;
        }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      bool divisible = true;
      for (int i = t + 1; i < n && divisible; ++i)
        for (int j = t + 1; j < n; ++j)
          if (w.m(i, j) % w.m(t, t) != 0) {
            w.add_row(t, i, 1);  // pull the bad row in and reduce again
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (w.m(t, t) < 0) w.negate_row(t);
  }

  SmithResult res;
  res.diag = IVec(n);
  for (int i = 0; i < n; ++i) res.diag(i) = w.m(i, i);
  res.U = w.u;
  res.Uinv = w.uinv;
  return res;
}

}  // namespace plumbsw
