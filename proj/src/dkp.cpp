#include "mbqc/dkp.hpp"

#include <algorithm>

namespace mbqc {

MeasurementPattern phi(const CircuitIR& c) {
  validate_circuit(c);
  MeasurementPattern p;
  for (const auto& g : c.gates) {
    if (auto* j = std::get_if<JGate>(&g)) {
      p.push(Prepare{j->out});
      p.push(Entangle{j->in, j->out});
      p.push(MeasureXY{j->in, -j->angle, {}, {}});
      p.push(CorrectX{j->out, DepExpr::single(j->in)});
    } else if (auto* z = std::get_if<CZGate>(&g)) {
      p.push(Entangle{z->a, z->b});
    } else {
      raise(ErrorKind::InvalidCircuit, "phi is undefined on CZPow gates");
    }
  }
  return p;
}

namespace {

void require_well_formed(const MeasurementPattern& p, const char* who) {
  auto diags = validate_pattern(p);
  if (!diags.empty())
    raise(ErrorKind::InvalidPattern, std::string(who) + ": " + diags.front().str());
}

}  // namespace

MeasurementPattern standardize(const MeasurementPattern& p) {
  require_well_formed(p, "standardize");

  std::vector<Command> preps, entangles, middle;
  // pending corrections carried rightward, per qubit
  std::map<std::string, DepExpr> acc_x, acc_z;

  auto substitute_shift = [&](const std::string& bit, const DepExpr& beta) {
    // a correction moved right across Shift(bit, beta) reads the shifted
    // bit; substituting s[bit] -> s[bit] + beta keeps its meaning
    for (auto* acc : {&acc_x, &acc_z})
      for (auto& [q, dep] : *acc)
        if (dep.contains(bit)) dep ^= beta;
  };

  for (const Command& c : p.commands) {
    if (std::holds_alternative<Prepare>(c)) {
      preps.push_back(c);
    } else if (auto* e = std::get_if<Entangle>(&c)) {
      // E . X_a = Z_b X_a . E and symmetrically
      if (!acc_x[e->a].empty()) acc_z[e->b] ^= acc_x[e->a];
      if (!acc_x[e->b].empty()) acc_z[e->a] ^= acc_x[e->b];
      entangles.push_back(c);
    } else if (auto* m = std::get_if<MeasureXY>(&c)) {
      MeasureXY out = *m;
      out.sign ^= acc_x[m->qubit];
      out.pi ^= acc_z[m->qubit];
      acc_x.erase(m->qubit);
      acc_z.erase(m->qubit);
      middle.push_back(out);
    } else if (auto* m2 = std::get_if<MeasureYZ>(&c)) {
      // X conjugates the YZ observable to its antipode (a pi shift), Z flips
      // the sign of the angle
      MeasureYZ out = *m2;
      out.sign ^= acc_z[m2->qubit];
      out.pi ^= acc_x[m2->qubit];
      acc_x.erase(m2->qubit);
      acc_z.erase(m2->qubit);
      middle.push_back(out);
    } else if (auto* mz = std::get_if<MeasureZ>(&c)) {
      // Mz . Z = Mz ; Mz . X = Shift . Mz
      DepExpr xdep = acc_x[mz->qubit];
      acc_x.erase(mz->qubit);
      acc_z.erase(mz->qubit);
      middle.push_back(*mz);
      if (!xdep.empty()) middle.push_back(Shift{mz->qubit, xdep});
    } else if (auto* cx = std::get_if<CorrectX>(&c)) {
      acc_x[cx->qubit] ^= cx->dep;
    } else if (auto* cz = std::get_if<CorrectZ>(&c)) {
      acc_z[cz->qubit] ^= cz->dep;
    } else if (auto* s = std::get_if<Shift>(&c)) {
      substitute_shift(s->qubit, s->dep);
      middle.push_back(*s);
    } else if (std::holds_alternative<TraceOut>(c)) {
      middle.push_back(c);  // kept in place at the tail phase boundary
    }
  }

  MeasurementPattern out;
  for (auto& c : preps) out.push(std::move(c));
  for (auto& c : entangles) out.push(std::move(c));
  // trace-outs belong after measurements; stable-extract them
  std::vector<Command> tail;
  for (auto& c : middle) {
    if (std::holds_alternative<TraceOut>(c))
      tail.push_back(std::move(c));
    else
      out.push(std::move(c));
  }
  for (const auto& [q, dep] : acc_x)
    if (!dep.empty()) out.push(CorrectX{q, dep});
  for (const auto& [q, dep] : acc_z)
    if (!dep.empty()) out.push(CorrectZ{q, dep});
  for (auto& c : tail) out.push(std::move(c));
  return out;
}

MeasurementPattern eliminate_pi(const MeasurementPattern& p) {
  MeasurementPattern out;
  for (const Command& c : p.commands) {
    if (auto* m = std::get_if<MeasureXY>(&c)) {
      if (!m->pi.empty()) {
        DepExpr gamma = m->pi;
        out.push(MeasureXY{m->qubit, m->angle, m->sign, {}});
        out.push(Shift{m->qubit, gamma});
        continue;
      }
    } else if (auto* m2 = std::get_if<MeasureYZ>(&c)) {
      if (!m2->pi.empty()) {
        DepExpr gamma = m2->pi;
        out.push(MeasureYZ{m2->qubit, m2->angle, m2->sign, {}});
        out.push(Shift{m2->qubit, gamma});
        continue;
      }
    }
    out.push(c);
  }
  return out;
}

MeasurementPattern pauli_simplify(const MeasurementPattern& p) {
  MeasurementPattern out;
  for (const Command& c : p.commands) {
    if (auto* m = std::get_if<MeasureXY>(&c)) {
      if (!m->sign.empty() && m->angle.is_multiple_of_pi()) {
        // sign changes of a pi-multiple angle have no effect
        out.push(MeasureXY{m->qubit, m->angle, {}, m->pi});
        continue;
      }
      if (!m->sign.empty() && m->angle.is_odd_half_pi()) {
        // M^{(-1)^b a} = S^b M^a for a an odd multiple of pi/2
        DepExpr beta = m->sign;
        out.push(MeasureXY{m->qubit, m->angle, {}, m->pi});
        out.push(Shift{m->qubit, beta});
        continue;
      }
    }
    out.push(c);
  }
  return out;
}

MeasurementPattern signal_shift(const MeasurementPattern& p) {
  MeasurementPattern out;
  std::map<std::string, DepExpr> shift_acc;  // accumulated toggles per bit

  auto resolve = [&](const DepExpr& d) {
    DepExpr r;
    for (const auto& b : d.bits) {
      r ^= DepExpr::single(b);
      auto it = shift_acc.find(b);
      if (it != shift_acc.end()) r ^= it->second;
    }
    return r;
  };

  for (const Command& c : p.commands) {
    if (auto* s = std::get_if<Shift>(&c)) {
      shift_acc[s->qubit] ^= resolve(s->dep);
      continue;
    }
    if (auto* m = std::get_if<MeasureXY>(&c)) {
      out.push(MeasureXY{m->qubit, m->angle, resolve(m->sign), resolve(m->pi)});
    } else if (auto* m2 = std::get_if<MeasureYZ>(&c)) {
      out.push(MeasureYZ{m2->qubit, m2->angle, resolve(m2->sign), resolve(m2->pi)});
    } else if (auto* cx = std::get_if<CorrectX>(&c)) {
      out.push(CorrectX{cx->qubit, resolve(cx->dep)});
    } else if (auto* cz = std::get_if<CorrectZ>(&c)) {
      out.push(CorrectZ{cz->qubit, resolve(cz->dep)});
    } else {
      out.push(c);
    }
  }
  return out;
}

namespace {

bool is_pauli_measurement(const Command& c) {
  if (auto* m = std::get_if<MeasureXY>(&c)) return m->angle.is_pauli_axis();
  return std::holds_alternative<MeasureZ>(c);
}

// Move dependency-free Pauli measurements to the front of the measurement
// phase, sorted by label among themselves.
MeasurementPattern pauli_first(const MeasurementPattern& p) {
  std::vector<Command> head, paulis, rest;
  std::size_t i = 0;
  for (; i < p.commands.size(); ++i) {
    const Command& c = p.commands[i];
    if (std::holds_alternative<Prepare>(c) || std::holds_alternative<Entangle>(c))
      head.push_back(c);
    else
      break;
  }
  for (; i < p.commands.size(); ++i) {
    const Command& c = p.commands[i];
    bool free_pauli = is_pauli_measurement(c);
    if (auto* m = std::get_if<MeasureXY>(&c))
      free_pauli = free_pauli && m->sign.empty() && m->pi.empty();
    if (free_pauli)
      paulis.push_back(c);
    else
      rest.push_back(c);
  }
  std::stable_sort(paulis.begin(), paulis.end(), [](const Command& a, const Command& b) {
    auto label = [](const Command& c) {
      if (auto* m = std::get_if<MeasureXY>(&c)) return m->qubit;
      return std::get<MeasureZ>(c).qubit;
    };
    return label(a) < label(b);
  });
  MeasurementPattern out;
  for (auto& c : head) out.push(std::move(c));
  for (auto& c : paulis) out.push(std::move(c));
  for (auto& c : rest) out.push(std::move(c));
  return out;
}

}  // namespace

MeasurementPattern dkp_complete(const CircuitIR& c) {
  return pauli_first(signal_shift(pauli_simplify(eliminate_pi(standardize(phi(c))))));
}

DependencyMatrices dependency_matrices(const Geometry& geo, const SuccessorMap& f,
                                       const std::map<std::string, Angle>& angles) {
  // f must be a flow function for geo
  try {
    auto ord = natural_preorder(geo, f);
    if (!ord) raise(ErrorKind::NotAFlow, "successor map has a vicious circuit");
  } catch (const Error& e) {
    if (e.kind == ErrorKind::NotPathCover)
      raise(ErrorKind::NotAFlow, std::string("not a flow function: ") + e.what());
    throw;
  }
  for (const auto& v : geo.measured())
    if (!angles.count(v)) raise(ErrorKind::BadArgs, "missing angle for measured vertex " + v);

  DependencyMatrices out;
  out.order.assign(geo.vertices.begin(), geo.vertices.end());
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < out.order.size(); ++i) idx[out.order[i]] = i;
  std::size_t n = out.order.size();
  out.T = Gf2Matrix(n, n);
  out.F = Gf2Matrix(n, n);

  for (const auto& v : geo.measured()) {
    auto fv = f.succ(v);
    if (!fv) continue;
    std::size_t vi = idx.at(v);
    for (const auto& w : geo.neighbors(*fv))
      if (w != v) out.T.set(idx.at(w), vi, true);
    bool fv_measured_odd_half =
        !geo.outputs.count(*fv) && angles.at(*fv).is_odd_half_pi();
    if (fv_measured_odd_half)
      out.T.set(idx.at(*fv), vi, true);
    else
      out.F.set(idx.at(*fv), vi, true);
  }
  return out;
}

bool test_dependencies(const MeasurementPattern& p, const SuccessorMap& f) {
  auto diags = validate_pattern(p);
  if (!diags.empty()) raise(ErrorKind::InvalidInput, diags.front().str());
  if (!is_standard_form(p)) raise(ErrorKind::InvalidInput, "pattern not in standard form");
  for (const Command& c : p.commands)
    if (std::holds_alternative<Shift>(c))
      raise(ErrorKind::InvalidInput, "pattern contains Shift commands");

  Geometry geo = pattern_geometry(p);
  std::map<std::string, Angle> angles;
  std::map<std::string, DepExpr> sign_deps, pi_deps, x_corr, z_corr;
  for (const Command& c : p.commands) {
    if (auto* m = std::get_if<MeasureXY>(&c)) {
      angles[m->qubit] = m->angle;
      sign_deps[m->qubit] = m->sign;
      pi_deps[m->qubit] = m->pi;
    } else if (std::holds_alternative<MeasureYZ>(c) || std::holds_alternative<MeasureZ>(c) ||
               std::holds_alternative<TraceOut>(c)) {
      return false;  // outside the DKP image
    } else if (auto* cx = std::get_if<CorrectX>(&c)) {
      x_corr[cx->qubit] ^= cx->dep;
    } else if (auto* cz = std::get_if<CorrectZ>(&c)) {
      z_corr[cz->qubit] ^= cz->dep;
    }
  }

  DependencyMatrices dm = dependency_matrices(geo, f, angles);
  auto dinv = gf2_inverse(Gf2Matrix::identity(dm.order.size()) + dm.T);
  if (!dinv) return false;  // T of a flow is nilpotent; cannot happen
  Gf2Matrix D = *dinv;
  Gf2Matrix E = dm.F * D;

  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < dm.order.size(); ++i) idx[dm.order[i]] = i;
  auto row_set = [&](const Gf2Matrix& m, const std::string& w, bool drop_diagonal) {
    DepExpr r;
    std::size_t wi = idx.at(w);
    for (std::size_t vi = 0; vi < dm.order.size(); ++vi) {
      if (drop_diagonal && vi == wi) continue;
      if (m.get(wi, vi)) r ^= DepExpr::single(dm.order[vi]);
    }
    return r;
  };

  for (const auto& w : geo.measured()) {
    if (!angles.count(w)) return false;
    if (!pi_deps[w].empty()) return false;
    // sign dependencies on pi-multiple measurements are dropped by Pauli
    // simplification; elsewhere they must equal row w of E
    DepExpr expected = angles[w].is_multiple_of_pi() ? DepExpr{} : row_set(E, w, false);
    if (sign_deps[w] != expected) return false;
    if (x_corr.count(w) && !x_corr[w].empty()) return false;
    if (z_corr.count(w) && !z_corr[w].empty()) return false;
  }
  for (const auto& w : geo.outputs) {
    DepExpr ex = row_set(E, w, false);
    DepExpr ez = row_set(D, w, true);
    DepExpr have_x = x_corr.count(w) ? x_corr[w] : DepExpr{};
    DepExpr have_z = z_corr.count(w) ? z_corr[w] : DepExpr{};
    if (have_x != ex || have_z != ez) return false;
  }
  return true;
}

}  // namespace mbqc
