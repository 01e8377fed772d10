#include "mbqc/pattern_sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

namespace mbqc {

namespace {

struct BranchState {
  QubitRegister reg;
  std::map<std::string, int> bits;
  uint64_t branch_id = 0;  // measurement outcomes, first measurement = MSB side
  int measured = 0;
};

struct SimContext {
  const std::vector<Command>* commands;
  PatternSimOptions opts;
  int total_measurements = 0;
  std::vector<std::string> out_order;

  int parity(const BranchState& st, const DepExpr& d) const {
    int par = 0;
    for (const auto& b : d.bits) par ^= st.bits.at(b);
    return par;
  }

  // Kraus operators by increasing branch id
  void run(BranchState st, std::size_t at, int depth, std::vector<DenseMatrix>& out) const {
    const auto& cmds = *commands;
    for (std::size_t i = at; i < cmds.size(); ++i) {
      const Command& c = cmds[i];
      if (auto* np = std::get_if<Prepare>(&c)) {
        if (static_cast<int>(st.reg.live()) + 1 > opts.max_live)
          raise(ErrorKind::TooLarge, "too many live qubits");
        st.reg.add_qubit(np->qubit, cplx(1 / std::sqrt(2.0), 0), cplx(1 / std::sqrt(2.0), 0));
      } else if (auto* e = std::get_if<Entangle>(&c)) {
        st.reg.apply_cz_phase(e->a, e->b, cplx(-1, 0));
      } else if (auto* cx = std::get_if<CorrectX>(&c)) {
        if (parity(st, cx->dep)) st.reg.apply_single(cx->qubit, x_matrix());
      } else if (auto* cz = std::get_if<CorrectZ>(&c)) {
        if (parity(st, cz->dep)) st.reg.apply_single(cz->qubit, z_matrix());
      } else if (auto* sh = std::get_if<Shift>(&c)) {
        st.bits.at(sh->qubit) ^= parity(st, sh->dep);
      } else if (std::holds_alternative<TraceOut>(c)) {
        raise(ErrorKind::InvalidInput, "pattern_unitary does not support TraceOut");
      } else {
        // a measurement: fork the two outcomes
        int shift_bits = total_measurements - 1 - st.measured;
        auto fork = [&](int outcome, std::vector<DenseMatrix>& sink) {
          BranchState child = st;
          child.branch_id |= uint64_t(outcome) << shift_bits;
          child.measured++;
          if (auto* m = std::get_if<MeasureXY>(&c)) {
            double theta = parity(child, m->sign) ? -m->angle.to_double() : m->angle.to_double();
            if (parity(child, m->pi)) theta += M_PI;
            // <s_theta| = (<0| + (-1)^s e^{-i theta} <1|)/sqrt2
            cplx b1 = std::polar(1.0 / std::sqrt(2.0), -theta);
            if (outcome) b1 = -b1;
            child.reg.project(m->qubit, cplx(1 / std::sqrt(2.0), 0), b1);
            child.bits[m->qubit] = outcome;
          } else if (auto* m2 = std::get_if<MeasureYZ>(&c)) {
            double theta =
                parity(child, m2->sign) ? -m2->angle.to_double() : m2->angle.to_double();
            if (parity(child, m2->pi)) theta += M_PI;
            // <+-yz_theta| = ((1 +- e^{i theta}) <0| + (1 -+ e^{i theta}) <1|)/2
            cplx ph = std::polar(1.0, theta);
            cplx b0 = (outcome == 0) ? (1.0 + ph) * 0.5 : (1.0 - ph) * 0.5;
            cplx b1 = (outcome == 0) ? (1.0 - ph) * 0.5 : (1.0 + ph) * 0.5;
            child.reg.project(m2->qubit, b0, b1);
            child.bits[m2->qubit] = outcome;
          } else {
            auto* mz = std::get_if<MeasureZ>(&c);
            child.reg.project(mz->qubit, outcome == 0 ? 1.0 : 0.0, outcome == 0 ? 0.0 : 1.0);
            child.bits[mz->qubit] = outcome;
          }
          run(std::move(child), i + 1, depth + 1, sink);
        };
        if (opts.threads > 1 && depth < thread_depth()) {
          std::vector<DenseMatrix> left, right;
          auto fut = std::async(std::launch::async, [&]() { fork(0, left); });
          fork(1, right);
          fut.get();
          for (auto& k : left) out.push_back(std::move(k));
          for (auto& k : right) out.push_back(std::move(k));
        } else {
          fork(0, out);
          fork(1, out);
        }
        return;
      }
    }
    out.push_back(st.reg.to_matrix(out_order));
  }

  int thread_depth() const {
    int d = 0, t = opts.threads;
    while ((1 << d) < t) ++d;
    return d;
  }
};

}  // namespace

PatternSimResult pattern_unitary(const MeasurementPattern& p, const PatternSimOptions& opts) {
  auto diags = validate_pattern(p);
  if (!diags.empty()) raise(ErrorKind::InvalidPattern, diags.front().str());
  Geometry geo = pattern_geometry(p);

  int measured = 0;
  for (const Command& c : p.commands)
    if (std::holds_alternative<MeasureXY>(c) || std::holds_alternative<MeasureYZ>(c) ||
        std::holds_alternative<MeasureZ>(c))
      ++measured;
  if (measured > opts.max_measured)
    raise(ErrorKind::TooLarge, "too many measurements for branch enumeration");
  if (static_cast<int>(geo.n()) > opts.max_total)
    raise(ErrorKind::TooLarge, "too many qubits");
  if (static_cast<int>(geo.inputs.size()) > opts.max_live)
    raise(ErrorKind::TooLarge, "too many input qubits");

  std::vector<std::string> ins(geo.inputs.begin(), geo.inputs.end());
  std::vector<std::string> outs(geo.outputs.begin(), geo.outputs.end());

  SimContext ctx;
  ctx.commands = &p.commands;
  ctx.opts = opts;
  ctx.total_measurements = measured;
  ctx.out_order = outs;

  BranchState root{QubitRegister(ins, std::size_t(1) << ins.size()), {}, 0, 0};
  for (std::size_t i = 0; i < root.reg.mat.nrows; ++i) root.reg.mat.at(i, i) = 1.0;

  std::vector<DenseMatrix> kraus;
  kraus.reserve(std::size_t(1) << measured);
  ctx.run(std::move(root), 0, 0, kraus);

  PatternSimResult res;
  double tol = opts.tol;

  // locate the heaviest branch as the reference
  std::size_t ref = 0;
  double ref_norm = -1;
  double total_weight = 0;
  for (std::size_t b = 0; b < kraus.size(); ++b) {
    double fn = kraus[b].frobenius();
    total_weight += fn * fn;
    if (fn > ref_norm) {
      ref_norm = fn;
      ref = b;
    }
  }
  double dim_in = static_cast<double>(std::size_t(1) << ins.size());
  if (ref_norm <= tol) {
    res.reason = "all branches vanish";
    return res;
  }
  // sum_b K_b^dag K_b = I (trace preservation): total weight must be 2^{|I|}
  if (std::abs(total_weight - dim_in) > tol * dim_in * kraus.size()) {
    res.reason = "branch weights do not sum to the identity";
    return res;
  }
  // the reference branch must itself be proportional to an isometry
  DenseMatrix gram = kraus[ref].dagger() * kraus[ref];
  double lambda = 0;
  for (std::size_t i = 0; i < gram.nrows; ++i) lambda += gram.at(i, i).real();
  lambda /= static_cast<double>(gram.nrows);
  DenseMatrix defect = gram + DenseMatrix::identity(gram.nrows).scaled(cplx(-lambda, 0));
  if (defect.max_abs() > tol * std::max(1.0, lambda) * 100) {
    res.reason = "reference branch is not proportional to an isometry";
    res.witness_branch_a = ref;
    res.witness_branch_b = ref;
    return res;
  }
  // every non-null branch must be proportional to the reference
  for (std::size_t b = 0; b < kraus.size(); ++b) {
    double fn = kraus[b].frobenius();
    if (fn <= tol) continue;
    if (!equal_up_to_phase(kraus[b], kraus[ref].scaled(fn / ref_norm), tol * 100)) {
      res.reason = "branches are not proportional to a common operator";
      res.witness_branch_a = b;
      res.witness_branch_b = ref;
      return res;
    }
  }
  res.unitary = kraus[ref].scaled(cplx(1.0 / std::sqrt(lambda), 0));
  return res;
}

}  // namespace mbqc
