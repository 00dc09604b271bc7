#pragma once

#include <vector>

#include "ncdioph/group_algebra.hpp"
#include "ncdioph/interpretation.hpp"

namespace ncd {

/// Z in K[t] for a one-variable ring over a characteristic-zero field. The
/// integer represented by a domain point Y is Y(1); the domain is the Pell
/// set {±U_{n-1}} together with 0, written as (X^2 - (t^2-1)Y^2 - 1) Y = 0.
/// Also accepts a one-variable Laurent ring.
InterpPtr interp_Z_in_polyring(const PolyRingPtr& ring);

/// R[t1] in R[t1..tn] modulo <t2, ..., tn>; for Laurent rings the ideal is
/// <t2 - 1, ..., tn - 1>. `ring` is the n-variable target.
InterpPtr interp_quotient(const PolyRingPtr& ring);

/// K[t] as the centralizer of generator `letter` in the free algebra.
InterpPtr interp_Kt_in_freealg(const FreeAlgebraPtr& alg, std::uint32_t letter);

/// K[t1^±..tr^±] as the centralizer of g in K(G), with basis_j <-> t_j.
/// Throws std::invalid_argument unless `basis` generates C_G(g) according
/// to the oracle.
InterpPtr interp_laurent_in_groupalg(const GroupAlgebraPtr& alg, const GroupElement& g,
                                     const std::vector<GroupElement>& basis);

/// Z[i] in R[t, t^-1] when the field of `ring` contains i, Z otherwise.
/// The domain is the Laurent Pell set together with 0; the element
/// represented by Y is Y(1).
InterpPtr interp_Zi_in_laurent(const PolyRingPtr& ring);

/// Dimension one, literal equality and operations.
InterpPtr identity_interpretation(const Structure& s);

}  // namespace ncd
