#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/geometry.hpp"

namespace mbqc {

// Stable-index tensor expression over the {J(alpha), CZ} gate set.  Each gate
// J(alpha)[:out/in] deprecates the wire-segment index `in` and advances the
// fresh index `out`; CZ references two currently live indices.  CZPow is an
// extended dialect (fractional powers of CZ) accepted only by the simulator
// and the CLI pretty-printer.
struct JGate {
  std::string in;   // deprecated index
  std::string out;  // advanced index
  Angle angle;
};
struct CZGate {
  std::string a, b;
};
struct CZPowGate {
  std::string a, b;
  Angle exponent_pi;  // CZ^t with t = exponent_pi / pi, i.e. diag(1,1,1,e^{i*theta})
};

using Gate = std::variant<JGate, CZGate, CZPowGate>;

struct CircuitIR {
  std::vector<Gate> gates;
  std::set<std::string> inputs;   // indices never advanced
  std::set<std::string> outputs;  // indices never deprecated

  void push(Gate g) { gates.push_back(std::move(g)); }
  bool has_czpow() const;
};

// Checks the stable-index discipline: every index advanced at most once and
// deprecated at most once, CZ operands live at their position, declared
// inputs/outputs consistent.  Throws InvalidCircuit on violation.
void validate_circuit(const CircuitIR& c);

// The interaction graph of a circuit: vertices are the tensor indices, edges
// come from J gates (flow edges) and CZ pairs, I/O are the circuit's
// input/output indices, and f maps each deprecated index to the advanced
// index of its J gate.  Throws InvalidCircuit (including on duplicate edges).
struct InteractionGraph {
  Geometry geometry;
  std::map<std::string, std::string> successor;  // f
};
InteractionGraph interaction_graph(const CircuitIR& c);

std::string gate_str(const Gate& g);

}  // namespace mbqc
