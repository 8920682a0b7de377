// Lattice cohomology of a plumbing graph, per class of characteristic
// vectors: weighted cubes, finite rectangles, sublevel cubical complexes,
// and the normalized Euler characteristic eu.
//
// A q-cube (k, I) has vertices k + 2 sum_{j in I'} E_j over I' subset I, and
// weight max over those vertices of w(k) = -(k^2 + s)/8. Within one class
// all weights differ by integers, so after subtracting a base weight the
// whole combinatorics runs on int64 "relative levels"; only the final
// normalization returns to exact rationals.
//
// eu is computed from the sublevel filtration S_0 subset S_1 subset ... of
// the full class lattice: eu = -min(w) + sum_n chi~(S_n). Each S_n is finite
// (the weight is a proper positive definite quadratic), and its vertices are
// enumerated exactly inside an ellipsoid. The sum stabilizes once chi~
// vanishes; a configurable run of zero levels ends the scan, and a finite
// zone-rectangle computation cross-checks the value whenever the rectangle
// is small enough to enumerate.

#pragma once

#include "plumbsw/lattice.hpp"

#include <map>
#include <optional>
#include <vector>

namespace plumbsw {

struct Cube {
  QVec base;              // characteristic vector
  std::vector<int> dirs;  // I, vertex indices
};

/// R(k1,k2) = { k in [k1] : k2 <= k <= k1 }, lattice step 2E_v per axis.
struct Rectangle {
  QVec k1, k2;
};

/// Validates: both characteristic, same class, k1 - k2 in 2L with
/// non-negative coordinates.
Rectangle make_rectangle(const LatticeContext& ctx, const QVec& k1, const QVec& k2);

CharClass rectangle_class(const LatticeContext& ctx, const Rectangle& r);

/// Number of cubes in R, i.e. prod_v (2 m_v + 1) with k1 - k2 = 2 sum m_v E_v.
Int rectangle_cube_count(const LatticeContext& ctx, const Rectangle& r);

/// Every cube with all vertices in R. Guarded by `cap` (throws beyond it);
/// intended for small rectangles only.
std::vector<Cube> rectangle_cubes(const LatticeContext& ctx, const Rectangle& r,
                                  long cap = 200000);

/// max of w over the 2^{|I|} vertices of the cube.
Rat cube_weight(const LatticeContext& ctx, const QVec& k, const std::vector<int>& dirs);

/// E(A) = sum over cubes of (-1)^{|I|+1} w((k,I)).
Rat euler_E(const LatticeContext& ctx, const std::vector<Cube>& cubes);

/// M_A(t) = sum (-1)^{|I|} t^{w((k,I))}; exponents are exact rationals.
struct WeightPolynomial {
  std::map<Rat, Int> terms;  // exponent -> coefficient

  Rat value_at_one() const;
  Rat derivative_at_one() const;
};

WeightPolynomial weight_polynomial(const LatticeContext& ctx, const std::vector<Cube>& cubes);
WeightPolynomial weight_polynomial(const LatticeContext& ctx, const Rectangle& r);

/// Reduced rational Betti numbers of the sublevel complex S_n of R (all cubes
/// of weight <= n + min(w|R)), via exact boundary-matrix ranks.
std::vector<long> sublevel_betti(const LatticeContext& ctx, const Rectangle& r, long n);

struct EuOptions {
  long level_cap = 128;        // hard cap on sublevel depth before giving up
  int stab_window = 5;         // consecutive zero chi~ levels that end the scan
  long rect_cube_cap = 250000; // rectangle dual-route budget (cubes)
  bool rectangle_check = true;
};

struct EuResult {
  Rat eu;
  Rat d_invariant;                  // d[k] = 2 min w over the class
  std::vector<long long> chi_tilde; // reduced Euler characteristics per level
  long levels = 0;                  // sublevels actually scanned
  bool rectangle_checked = false;   // finite zone-rectangle route also agreed
};

/// eu(H^*(Gamma, [k])); throws ComputationError if the scan fails to
/// stabilize under the cap or if the rectangle cross-check disagrees.
EuResult eu_lattice(const LatticeContext& ctx, const CharClass& c, const EuOptions& opt = {});

/// eu([k]) == eu([-k]) across all classes.
bool verify_symmetry(const LatticeContext& ctx, const EuOptions& opt = {});

}  // namespace plumbsw
