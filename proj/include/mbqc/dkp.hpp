#pragma once

#include <map>
#include <utility>

#include "mbqc/circuit.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/gf2.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

// The operator homomorphism Phi: J(a)[:w/v] becomes
// [Prepare(w), Entangle(v,w), MeasureXY(v,-a), CorrectX(w,{s[v]})] and
// CZ[u,v] becomes [Entangle(u,v)], concatenated in circuit order.
// Throws InvalidCircuit (CZPow gates are rejected).
MeasurementPattern phi(const CircuitIR& c);

// Commute corrections rightward (E.X_v = Z_u X_v E induces Z on neighbors),
// absorb them into measurements as sign/pi dependencies, and arrange the
// phases prepare/entangle/measure+shift/correct.  CPTP map unchanged.
MeasurementPattern standardize(const MeasurementPattern& p);

// Replace every measurement carrying a pi-dependency gamma with the clean
// measurement followed by Shift(v, gamma).
MeasurementPattern eliminate_pi(const MeasurementPattern& p);

// Pauli simplifications: for angles in piZ drop the sign dependency; for odd
// multiples of pi/2 convert it into a Shift after the measurement.
MeasurementPattern pauli_simplify(const MeasurementPattern& p);

// Commute all Shift commands to the end (substituting into downstream
// dependencies with mod-2 cancellation) and delete them.
MeasurementPattern signal_shift(const MeasurementPattern& p);

// The complete construction: phi, standardize, eliminate_pi, pauli_simplify,
// signal_shift, then commute Pauli measurements to the front of the
// measurement phase (ordered by label among themselves).
MeasurementPattern dkp_complete(const CircuitIR& c);

// Dependency-propagation matrices over GF(2), indexed by vertices sorted by
// label.  T_wv = 1 iff (v in O^c, w ~ f(v), w != v) or (v in O^c, w = f(v)
// measured at an odd multiple of pi/2); F_wv = 1 iff v in O^c, w = f(v) and
// w is not measured at an odd multiple of pi/2.  Throws NotAFlow.
struct DependencyMatrices {
  Gf2Matrix T;
  Gf2Matrix F;
  std::vector<std::string> order;  // row/column label order
};
DependencyMatrices dependency_matrices(const Geometry& geo, const SuccessorMap& f,
                                       const std::map<std::string, Angle>& angles);

// True iff every dependency in the standardized, shift-free pattern matches
// the closed forms E = F(I-T)^{-1} (sign deps and X corrections; empty for
// measurements on pi-multiple angles, whose sign deps are droppable) and
// D = (I-T)^{-1} with the diagonal excluded (Z corrections).
// Throws InvalidInput unless p is standard form without Shift commands.
bool test_dependencies(const MeasurementPattern& p, const SuccessorMap& f);

}  // namespace mbqc
