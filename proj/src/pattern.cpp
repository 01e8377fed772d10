#include "mbqc/pattern.hpp"

#include <map>

namespace mbqc {

namespace {

enum class QubitState { Untouched, Active, Discarded };

struct Tracker {
  std::map<std::string, QubitState> state;
  std::map<std::string, bool> prepared_once;
  std::set<std::string> measured_bits;
  std::vector<Diagnostic> diags;

  QubitState get(const std::string& q) {
    auto it = state.find(q);
    return it == state.end() ? QubitState::Untouched : it->second;
  }

  // a non-Prepare quantum operation touches q
  void use(std::size_t idx, const std::string& q) {
    switch (get(q)) {
      case QubitState::Untouched:
        state[q] = QubitState::Active;  // implicit input qubit
        break;
      case QubitState::Active:
        break;
      case QubitState::Discarded:
        diags.push_back({idx, "operation on qubit '" + q + "' after its measurement/trace-out"});
        break;
    }
  }

  void prepare(std::size_t idx, const std::string& q) {
    switch (get(q)) {
      case QubitState::Untouched:
        state[q] = QubitState::Active;
        prepared_once[q] = true;
        break;
      case QubitState::Active:
        if (prepared_once.count(q))
          diags.push_back({idx, "qubit '" + q + "' prepared twice"});
        else
          diags.push_back({idx, "qubit '" + q + "' prepared after prior use"});
        break;
      case QubitState::Discarded:
        diags.push_back({idx, "re-allocation of qubit '" + q + "' after discard"});
        break;
    }
  }

  void discard(std::size_t idx, const std::string& q) {
    use(idx, q);
    state[q] = QubitState::Discarded;
  }

  void check_dep(std::size_t idx, const DepExpr& d) {
    for (const auto& b : d.bits)
      if (!measured_bits.count(b))
        diags.push_back({idx, "dependency on unmeasured bit s[" + b + "]"});
  }
};

}  // namespace

std::vector<Diagnostic> validate_pattern(const MeasurementPattern& p) {
  Tracker t;
  for (std::size_t i = 0; i < p.commands.size(); ++i) {
    const Command& c = p.commands[i];
    if (auto* np = std::get_if<Prepare>(&c)) {
      t.prepare(i, np->qubit);
    } else if (auto* e = std::get_if<Entangle>(&c)) {
      if (e->a == e->b) t.diags.push_back({i, "entangle with identical operands '" + e->a + "'"});
      t.use(i, e->a);
      t.use(i, e->b);
    } else if (auto* m = std::get_if<MeasureXY>(&c)) {
      t.check_dep(i, m->sign);
      t.check_dep(i, m->pi);
      t.discard(i, m->qubit);
      t.measured_bits.insert(m->qubit);
    } else if (auto* m2 = std::get_if<MeasureYZ>(&c)) {
      t.check_dep(i, m2->sign);
      t.check_dep(i, m2->pi);
      t.discard(i, m2->qubit);
      t.measured_bits.insert(m2->qubit);
    } else if (auto* mz = std::get_if<MeasureZ>(&c)) {
      t.discard(i, mz->qubit);
      t.measured_bits.insert(mz->qubit);
    } else if (auto* cx = std::get_if<CorrectX>(&c)) {
      t.check_dep(i, cx->dep);
      t.use(i, cx->qubit);
    } else if (auto* cz = std::get_if<CorrectZ>(&c)) {
      t.check_dep(i, cz->dep);
      t.use(i, cz->qubit);
    } else if (auto* s = std::get_if<Shift>(&c)) {
      t.check_dep(i, s->dep);
      if (!t.measured_bits.count(s->qubit))
        t.diags.push_back({i, "shift on bit s[" + s->qubit + "] before its measurement"});
    } else if (auto* tr = std::get_if<TraceOut>(&c)) {
      t.discard(i, tr->qubit);
    }
  }
  return t.diags;
}

bool is_standard_form(const MeasurementPattern& p) {
  // phases: 0 prepare, 1 entangle, 2 measure/shift, 3 correct
  int phase = 0;
  for (const Command& c : p.commands) {
    int want;
    if (std::holds_alternative<Prepare>(c))
      want = 0;
    else if (std::holds_alternative<Entangle>(c))
      want = 1;
    else if (std::holds_alternative<CorrectX>(c) || std::holds_alternative<CorrectZ>(c))
      want = 3;
    else if (std::holds_alternative<TraceOut>(c))
      want = 3;
    else
      want = 2;
    if (want < phase) return false;
    phase = want;
  }
  return true;
}

Geometry pattern_geometry(const MeasurementPattern& p) {
  auto diags = validate_pattern(p);
  if (!diags.empty())
    raise(ErrorKind::InvalidPattern, "pattern is ill-formed: " + diags.front().str());

  Geometry g;
  std::set<std::string> prepared, discarded;
  for (const Command& c : p.commands) {
    if (auto* np = std::get_if<Prepare>(&c)) {
      g.add_vertex(np->qubit);
      prepared.insert(np->qubit);
    } else if (auto* e = std::get_if<Entangle>(&c)) {
      Edge key = make_edge(e->a, e->b);
      g.add_vertex(e->a);
      g.add_vertex(e->b);
      auto it = g.edges.find(key);
      if (it == g.edges.end())
        g.edges[key] = Angle::pi();
      else
        g.edges.erase(it);  // CZ . CZ = 1
    } else if (auto* m = std::get_if<MeasureXY>(&c)) {
      g.add_vertex(m->qubit);
      discarded.insert(m->qubit);
      g.planes[m->qubit] = MeasPlane::XY;
    } else if (auto* m2 = std::get_if<MeasureYZ>(&c)) {
      g.add_vertex(m2->qubit);
      discarded.insert(m2->qubit);
      g.planes[m2->qubit] = MeasPlane::YZ;
    } else if (auto* mz = std::get_if<MeasureZ>(&c)) {
      g.add_vertex(mz->qubit);
      discarded.insert(mz->qubit);
    } else if (auto* cx = std::get_if<CorrectX>(&c)) {
      g.add_vertex(cx->qubit);
    } else if (auto* cz = std::get_if<CorrectZ>(&c)) {
      g.add_vertex(cz->qubit);
    } else if (auto* tr = std::get_if<TraceOut>(&c)) {
      g.add_vertex(tr->qubit);
      discarded.insert(tr->qubit);
    }
  }
  for (const auto& v : g.vertices) {
    if (!prepared.count(v)) g.inputs.insert(v);
    if (!discarded.count(v)) g.outputs.insert(v);
  }
  return g;
}

std::string command_str(const Command& c) {
  if (auto* np = std::get_if<Prepare>(&c)) return "N[" + np->qubit + "]";
  if (auto* e = std::get_if<Entangle>(&c)) return "E[" + e->a + "," + e->b + "]";
  if (auto* m = std::get_if<MeasureXY>(&c))
    return "M[" + m->qubit + ";" + m->angle.str() + ";" + m->sign.str() + ";" + m->pi.str() + "]";
  if (auto* m2 = std::get_if<MeasureYZ>(&c))
    return "Myz[" + m2->qubit + ";" + m2->angle.str() + ";" + m2->sign.str() + ";" +
           m2->pi.str() + "]";
  if (auto* mz = std::get_if<MeasureZ>(&c)) return "Mz[" + mz->qubit + "]";
  if (auto* cx = std::get_if<CorrectX>(&c)) return "X[" + cx->qubit + ";" + cx->dep.str() + "]";
  if (auto* cz = std::get_if<CorrectZ>(&c)) return "Z[" + cz->qubit + ";" + cz->dep.str() + "]";
  if (auto* s = std::get_if<Shift>(&c)) return "S[" + s->qubit + ";" + s->dep.str() + "]";
  if (auto* tr = std::get_if<TraceOut>(&c)) return "Tr[" + tr->qubit + "]";
  return "?";
}

}  // namespace mbqc
