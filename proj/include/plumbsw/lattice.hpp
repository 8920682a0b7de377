// Exact lattice arithmetic for a validated plumbing graph.
//
// L = Z<E_v> with the intersection form I (diagonal e_v, off-diagonal 1 on
// edges); L' is its dual, generated by the E*_v with (E*_v, E_w) = -delta_vw.
// Elements of L' are kept in E_v coordinates as exact rational vectors
// (denominators divide d = det(-I)); the integer dual coordinates
// a_v = -(l', E_v) are available on demand and are what most enumeration
// code actually runs on.
//
// The discriminant group L'/L (order d) is presented through the Smith
// normal form of -I acting on dual coordinates; a ClassId is the canonical
// reduced tuple in those coordinates, which gives O(1) equality and a stable
// iteration order.

#pragma once

#include "plumbsw/graph.hpp"
#include "plumbsw/numeric.hpp"
#include "plumbsw/snf.hpp"

#include <cstdint>
#include <vector>

namespace plumbsw {

/// Canonical label of an element of L'/L. Only the invariant factors > 1
/// contribute coordinates, so the trivial group has an empty tuple.
struct ClassId {
  std::vector<std::int64_t> t;

  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
  std::string str() const;
};

struct DiscriminantGroup {
  Int order;                                 // d = det(-I)
  std::vector<std::int64_t> factors;         // invariant factors > 1
  std::vector<int> factor_rows;              // their row indices in the SNF
  SmithResult snf;                           // of -I on dual coordinates

  ClassId class_of_dual(const IVec& a) const;
  /// Dual-coordinate vector of a representative of h.
  IVec dual_rep(const ClassId& h) const;
  ClassId add(const ClassId& x, const ClassId& y) const;
  ClassId neg(const ClassId& x) const;
  ClassId zero() const;
  /// All d classes, in lexicographic tuple order, zero first.
  std::vector<ClassId> enumerate() const;
};

class LatticeContext {
 public:
  explicit LatticeContext(const PlumbingGraph& g);

  const PlumbingGraph& graph() const { return graph_; }
  int size() const { return s_; }
  const IMat& form() const { return I_; }               // intersection form
  const Int& det() const { return d_; }                 // det(-I)
  const RMat& inv_neg_form() const { return invI_; }    // (-I)^{-1}
  const IMat& adj_neg_form() const { return adjI_; }    // d * (-I)^{-1}, integral
  const std::vector<int>& valency() const { return valency_; }

  /// E*_v in E coordinates: column v of (-I)^{-1}. All entries positive.
  QVec dual_basis(int v) const { return invI_.col(v); }
  /// Canonical class K = sum (2 + e_v) E*_v.
  const QVec& canonical_class() const { return K_; }
  const IVec& canonical_dual() const { return aK_; }    // a_v(K) = 2 + e_v

  const DiscriminantGroup& discriminant_group() const { return disc_; }

  /// Dual coordinates a_v = -(l', E_v); exact integers for l' in L'.
  IVec dual(const QVec& x) const;
  /// Inverse of dual(): the L' element with the given dual coordinates.
  QVec from_dual(const IVec& a) const;
  bool in_dual_lattice(const QVec& x) const;   // x in L'
  bool in_lattice(const QVec& x) const;        // x in L

  ClassId class_of(const QVec& x) const;
  QVec class_rep(const ClassId& h) const;

  /// k in Char, tested as (k, E_v) = e_v mod 2 for all v.
  bool is_characteristic(const QVec& k) const;

  std::string qvec_str(const QVec& x) const;

 private:
  PlumbingGraph graph_;
  int s_;
  IMat I_;
  Int d_;
  RMat invI_;
  IMat adjI_;
  std::vector<int> valency_;
  QVec K_;
  IVec aK_;
  DiscriminantGroup disc_;
};

LatticeContext build_context(const PlumbingGraph& g);

/// Symmetric bilinear extension of the intersection form to L' ⊗ Q.
template <typename DA, typename DB>
Rat pairing(const LatticeContext& ctx, const Eigen::MatrixBase<DA>& x,
            const Eigen::MatrixBase<DB>& y) {
  if (x.size() != ctx.size() || y.size() != ctx.size())
    throw PreconditionError("pairing: dimension mismatch");
  Rat acc = 0;
  const IMat& I = ctx.form();
  for (int i = 0; i < ctx.size(); ++i) {
    Rat row = 0;
    for (int j = 0; j < ctx.size(); ++j)
      if (I(i, j) != 0) row += Rat(I(i, j)) * y(j);
    acc += x(i) * row;
  }
  return acc;
}

inline Rat norm2(const LatticeContext& ctx, const QVec& x) { return pairing(ctx, x, x); }

/// (l', E_v) <= 0 for all v; strict variant uses < 0.
bool in_lipman_cone(const LatticeContext& ctx, const QVec& x, bool strict = false);

/// w(k) = -(k^2 + s)/8 for characteristic k.
Rat weight_w(const LatticeContext& ctx, const QVec& k);

/// Restriction L'(G) -> L'(G \ u) for an end-vertex u: drops the u dual
/// coordinate. sub must be the context of delete_end_vertex(G, u).
QVec restrict_to_subgraph(const LatticeContext& ctx, const LatticeContext& sub,
                          int u, const QVec& x);

/// Representative l' of h whose dual coordinates satisfy a_v >= -e_v - 1
/// for every v. Deterministic for a fixed context.
QVec zone_representative(const LatticeContext& ctx, const ClassId& h);

/// Class over Char/2L, identified with the L'/L class of (k - K)/2.
struct CharClass {
  ClassId half;

  friend bool operator==(const CharClass&, const CharClass&) = default;
};

/// The class [K + 2l'] with [l'] = -h; the spin^c label map h -> h*sigma_can.
CharClass spinc_char_class(const LatticeContext& ctx, const ClassId& h);

/// Involution [k] -> [-k] on Char/2L.
CharClass char_class_involution(const LatticeContext& ctx, const CharClass& c);

/// A characteristic representative of c (namely K + 2 * rep(c.half)).
QVec char_class_rep(const LatticeContext& ctx, const CharClass& c);

/// Pullback L'(G) -> L'(G') along a blow-up (preserves pairings and classes).
/// For an edge blow-up the new coordinate is coord_v + coord_w; for a vertex
/// blow-up it is coord_v. The new vertex must be the last one of G'.
QVec blowup_pullback(const LatticeContext& ctx, const LatticeContext& blown,
                     const QVec& x, int v, int w = -1);

/// JSON-safe coordinate strings ("p/q") for a QVec.
std::vector<std::string> qvec_strings(const QVec& x);

}  // namespace plumbsw
