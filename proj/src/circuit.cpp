#include "mbqc/circuit.hpp"

namespace mbqc {

bool CircuitIR::has_czpow() const {
  for (const auto& g : gates)
    if (std::holds_alternative<CZPowGate>(g)) return true;
  return false;
}

namespace {

// Walks the gate list tracking live indices; shared by validation and
// interaction-graph construction.
struct IndexWalk {
  std::set<std::string> live;
  std::set<std::string> advanced, deprecated;

  explicit IndexWalk(const CircuitIR& c) : live(c.inputs) {}

  void check_live(const std::string& idx, const char* what) {
    if (!live.count(idx))
      raise(ErrorKind::InvalidCircuit,
            std::string(what) + " references index '" + idx + "' which is not current");
  }

  void advance(const std::string& idx) {
    if (advanced.count(idx) || live.count(idx) || deprecated.count(idx))
      raise(ErrorKind::InvalidCircuit, "index '" + idx + "' advanced twice or reused");
    advanced.insert(idx);
    live.insert(idx);
  }

  void deprecate(const std::string& idx) {
    check_live(idx, "J gate");
    deprecated.insert(idx);
    live.erase(idx);
  }
};

}  // namespace

void validate_circuit(const CircuitIR& c) {
  IndexWalk w(c);
  for (const auto& g : c.gates) {
    if (auto* j = std::get_if<JGate>(&g)) {
      if (j->in == j->out) raise(ErrorKind::InvalidCircuit, "J gate with in == out");
      w.deprecate(j->in);
      w.advance(j->out);
    } else if (auto* z = std::get_if<CZGate>(&g)) {
      if (z->a == z->b) raise(ErrorKind::InvalidCircuit, "CZ with identical operands");
      w.check_live(z->a, "CZ");
      w.check_live(z->b, "CZ");
    } else if (auto* zp = std::get_if<CZPowGate>(&g)) {
      if (zp->a == zp->b) raise(ErrorKind::InvalidCircuit, "CZPow with identical operands");
      w.check_live(zp->a, "CZPow");
      w.check_live(zp->b, "CZPow");
    }
  }
  if (w.live != c.outputs)
    raise(ErrorKind::InvalidCircuit, "declared outputs do not match the final live indices");
  for (const auto& idx : c.inputs)
    if (w.advanced.count(idx))
      raise(ErrorKind::InvalidCircuit, "declared input '" + idx + "' is advanced by a gate");
}

InteractionGraph interaction_graph(const CircuitIR& c) {
  validate_circuit(c);
  InteractionGraph ig;
  Geometry& g = ig.geometry;
  for (const auto& idx : c.inputs) g.add_vertex(idx);

  auto add_simple_edge = [&](const std::string& u, const std::string& v, Angle w) {
    if (g.has_edge(u, v))
      raise(ErrorKind::InvalidCircuit,
            "duplicate interaction edge " + u + "-" + v + " (multigraph geometry)");
    g.add_edge(u, v, w);
  };

  for (const auto& gate : c.gates) {
    if (auto* j = std::get_if<JGate>(&gate)) {
      add_simple_edge(j->in, j->out, Angle::pi());
      ig.successor[j->in] = j->out;
    } else if (auto* z = std::get_if<CZGate>(&gate)) {
      add_simple_edge(z->a, z->b, Angle::pi());
    } else if (auto* zp = std::get_if<CZPowGate>(&gate)) {
      add_simple_edge(zp->a, zp->b, zp->exponent_pi);
    }
  }
  g.inputs = c.inputs;
  g.outputs = c.outputs;
  return ig;
}

std::string gate_str(const Gate& g) {
  if (auto* j = std::get_if<JGate>(&g))
    return "J(" + j->angle.str() + ")[:" + j->out + "/" + j->in + "]";
  if (auto* z = std::get_if<CZGate>(&g)) return "CZ[" + z->a + "," + z->b + "]";
  if (auto* zp = std::get_if<CZPowGate>(&g))
    return "CZ^(" + zp->exponent_pi.str() + "/pi)[" + zp->a + "," + zp->b + "]";
  return "?";
}

}  // namespace mbqc
