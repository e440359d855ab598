#pragma once

#include <optional>
#include <utility>

#include "verlinde/center.hpp"
#include "verlinde/phase_value.hpp"
#include "verlinde/weyl.hpp"

namespace verlinde {

// Bimultiplicative form on the fixed subgroup of the Coxeter action on T/Z:
// value e^{2 pi i k B((1-w)^{-1} u, v)} on representatives u, v in Lambda_Z.
// Requires k0(Z) | k; descends mod (1-w) Lambda_Z.
PhaseValue kappa(const RootDatum& rd, const WeylElement& coxeter,
                 const CenterSubgroup& Z, long long k, const RatVec& u,
                 const RatVec& v);

// Phase factor attached to a pair of center elements. Well defined when each
// element's level-k action on the weights has a fixed point; the
// implementation verifies representative independence by shifting u and v by
// every simple coroot and throws when the value would depend on the choice.
PhaseValue delta(const RootDatum& rd, const CenterSubgroup& Z, long long k,
                 const CenterElement& c1, const CenterElement& c2,
                 const WeylElement* coxeter_like = nullptr);

// Case-by-case closed forms for the classical families (decomposition over
// the standard center generators with the tabulated pairing exponents).
// Throws precondition_error for uncovered types (E6, E7).
PhaseValue delta_closed_form(const RootDatum& rd, const CenterSubgroup& Z,
                             long long k, const CenterElement& c1,
                             const CenterElement& c2);

// Commutator map of the level-k prequantization problem on the double of
// G/Z: q = e^{2 pi i k (B(u1, v2) - B(u2, v1))} for pairs in Lambda_Z^2.
PhaseValue prequant_commutator(const RootDatum& rd, const CenterSubgroup& Z,
                               long long k, const std::pair<RatVec, RatVec>& u,
                               const std::pair<RatVec, RatVec>& v);

// q == 1 on generator pairs, cross-checked against k0 | k; the two routes
// must agree.
bool is_prequantizable(const RootDatum& rd, const CenterSubgroup& Z,
                       long long k);

}  // namespace verlinde
