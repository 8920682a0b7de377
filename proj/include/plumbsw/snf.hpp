// Smith normal form of square integer matrices, with the left transform and
// its inverse tracked exactly. Used to present the finite group Z^s / A Z^s.

#pragma once

#include "plumbsw/numeric.hpp"

namespace plumbsw {

struct SmithResult {
  IVec diag;   // d_1 | d_2 | ... | d_s, all >= 0
  IMat U;      // unimodular, U * A * V = diag(d)
  IMat Uinv;   // exact inverse of U
};

/// U A V = D with d_1 | d_2 | ... ; V is not returned (nothing here needs it:
/// coker(A) = Z^s / A Z^s is presented by y -> U y mod d).
SmithResult smith_normal_form(const IMat& a);

}  // namespace plumbsw
