// Periodic constants of one-variable series and the end-vertex surgery
// recursion for the Seiberg-Witten table.
//
// The periodic constant of S(t) = sum c_i t^i: if for some period p the
// partial sums sum_{i<pn} c_i agree, for all large n, with a polynomial
// P_p(n) of degree <= 2, then P_p(0) is independent of p; that constant is
// pc(S). Fits are exact (finite differences over the integer blocks) and are
// verified on extra nodes before a value is accepted.

#pragma once

#include "plumbsw/hilbert.hpp"

namespace plumbsw {

struct PeriodicConstantResult {
  Rat value;
  long period_used = 0;
  long fit_lo = 0, fit_hi = 0;  // block-index window the polynomial matched
  long verified_points = 0;     // nodes beyond the three used by the fit
};

/// Smallest candidate period whose block partial sums are eventually a
/// quadratic; throws ComputationError if no candidate fits the window.
PeriodicConstantResult periodic_constant(const std::vector<Int>& coeffs,
                                         const std::vector<long>& periods);

struct PcOptions {
  long initial_blocks = 16;  // starting window, in d-blocks
  long max_blocks = 512;     // growth cap before giving up
  int period_multiples = 8;  // candidate periods d, 2d, ..., 8d
};

/// pc of the reduced series of class h at end-vertex u, with adaptive window
/// growth. Optionally reports the fit details.
Rat pc_of_reduced_series(const LatticeContext& ctx, const ClassId& h, int u,
                         const PcOptions& opt = {},
                         PeriodicConstantResult* details = nullptr);

/// Partial-sum identity: h_u(l') equals the sum of the first d*l'_u
/// coefficients of the reduced series of [l'] at u.
bool verify_partial_sum(const LatticeContext& ctx, const QVec& lp, int u,
                        const PcOptions& opt = {});

/// The surgery identity relating pc on the graph to the s-invariants of the
/// graph and of the graph minus u, checked at a representative with
/// (l', E*_u) in (-1, 0].
bool surgery_identity_direct(const LatticeContext& ctx, const ClassId& h, int u,
                             const PcOptions& opt = {});

/// Same check, routed through a blow-up of the supporting edge whenever the
/// neighbour of u has valency != 2 (and also checked directly).
bool verify_surgery_identity(const LatticeContext& ctx, const ClassId& h, int u,
                             const PcOptions& opt = {});

/// Full Seiberg-Witten table by recursion on end-vertex deletion
/// (method tag "surgery"); single vertices fall back to the s-invariant.
SwTable sw_surgery_all(const LatticeContext& ctx, const PcOptions& opt = {});

Rat sw_via_surgery(const LatticeContext& ctx, const ClassId& h, const PcOptions& opt = {});

}  // namespace plumbsw
