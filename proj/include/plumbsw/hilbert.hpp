// The Hilbert-polynomial route to the Seiberg-Witten invariants: for a
// representative l' of -h with dual coordinates a_v >= -e_v - 1, the value
//
//   s(h) = -h(l') - ((K + 2l')^2 + s) / 8
//
// is independent of the representative, and s(h) is the Seiberg-Witten
// invariant of the spin^c structure h * sigma_can.

#pragma once

#include "plumbsw/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plumbsw {

struct SwTable {
  std::vector<std::pair<ClassId, Rat>> rows;  // discriminant enumerate() order
  std::string method;
  std::uint64_t graph_fingerprint = 0;

  const Rat& at(const ClassId& h) const;
  std::string to_json() const;  // deterministic class order, exact fractions
};

/// The quadratic expression of the counting function at one representative.
Rat hilbert_value_at(const LatticeContext& ctx, const QVec& lp);

/// s(h), evaluated at the zone representative of -h.
Rat s_invariant(const LatticeContext& ctx, const ClassId& h);

/// Full table h -> s(h) (method tag "series").
SwTable sw_all(const LatticeContext& ctx);

/// Evaluates the expression at `count` distinct zone representatives of -h
/// and reports whether all values agree.
bool hilbert_expression_check(const LatticeContext& ctx, const ClassId& h, int count);

/// Distinct in-zone representatives of a class (base one first).
std::vector<QVec> zone_representatives(const LatticeContext& ctx, const ClassId& h, int count);

/// Class matching along a blow-up: h on the base graph corresponds to
/// [pullback of a representative] on the blown-up graph.
ClassId transport_class_blowup(const LatticeContext& ctx, const LatticeContext& blown,
                               const ClassId& h, int v, int w = -1);

}  // namespace plumbsw
