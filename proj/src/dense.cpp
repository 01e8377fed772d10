#include "mbqc/dense.hpp"

#include <algorithm>
#include <cmath>

#include "mbqc/errors.hpp"

namespace mbqc {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (ncols != o.nrows) raise(ErrorKind::BadArgs, "matrix shape mismatch");
  DenseMatrix r(nrows, o.ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t k = 0; k < ncols; ++k) {
      cplx v = at(i, k);
      if (v == cplx(0, 0)) continue;
      for (std::size_t j = 0; j < o.ncols; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

DenseMatrix DenseMatrix::dagger() const {
  DenseMatrix r(ncols, nrows);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r.at(j, i) = std::conj(at(i, j));
  return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (nrows != o.nrows || ncols != o.ncols) raise(ErrorKind::BadArgs, "matrix shape mismatch");
  DenseMatrix r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

DenseMatrix DenseMatrix::scaled(cplx s) const {
  DenseMatrix r = *this;
  for (auto& v : r.a) v *= s;
  return r;
}

double DenseMatrix::max_abs() const {
  double m = 0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::frobenius() const {
  double s = 0;
  for (const auto& v : a) s += std::norm(v);
  return std::sqrt(s);
}

double DenseMatrix::unitarity_defect() const {
  DenseMatrix p = dagger() * (*this);
  for (std::size_t i = 0; i < p.nrows; ++i) p.at(i, i) -= 1.0;
  return p.max_abs();
}

DenseMatrix j_matrix(const Angle& alpha) {
  double h = alpha.to_double() / 2.0;
  cplx em = std::polar(1.0, -h), ep = std::polar(1.0, h);
  double r = 1.0 / std::sqrt(2.0);
  DenseMatrix m(2, 2);
  m.at(0, 0) = r * em;
  m.at(0, 1) = r * ep;
  m.at(1, 0) = r * em;
  m.at(1, 1) = -r * ep;
  return m;
}

DenseMatrix rz_matrix(const Angle& alpha) {
  double h = alpha.to_double() / 2.0;
  DenseMatrix m(2, 2);
  m.at(0, 0) = std::polar(1.0, -h);
  m.at(1, 1) = std::polar(1.0, h);
  return m;
}

DenseMatrix h_matrix() {
  double r = 1.0 / std::sqrt(2.0);
  DenseMatrix m(2, 2);
  m.at(0, 0) = r;
  m.at(0, 1) = r;
  m.at(1, 0) = r;
  m.at(1, 1) = -r;
  return m;
}

DenseMatrix x_matrix() {
  DenseMatrix m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  return m;
}

DenseMatrix y_matrix() {
  DenseMatrix m(2, 2);
  m.at(0, 1) = cplx(0, -1);
  m.at(1, 0) = cplx(0, 1);
  return m;
}

DenseMatrix z_matrix() {
  DenseMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 1) = -1;
  return m;
}

DenseMatrix s_matrix() {
  DenseMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 1) = cplx(0, 1);
  return m;
}

QubitRegister::QubitRegister(const std::vector<std::string>& initial, std::size_t ncols)
    : order_(initial) {
  mat = DenseMatrix(std::size_t(1) << order_.size(), ncols);
}

int QubitRegister::pos(const std::string& label) const {
  for (std::size_t i = 0; i < order_.size(); ++i)
    if (order_[i] == label) return static_cast<int>(i);
  raise(ErrorKind::BadArgs, "qubit '" + label + "' is not live");
}

void QubitRegister::add_qubit(const std::string& label, cplx amp0, cplx amp1) {
  // appended at the least significant position
  std::size_t rows = mat.nrows;
  DenseMatrix next(rows * 2, mat.ncols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < mat.ncols; ++c) {
      next.at(2 * r, c) = amp0 * mat.at(r, c);
      next.at(2 * r + 1, c) = amp1 * mat.at(r, c);
    }
  mat = std::move(next);
  order_.push_back(label);
}

void QubitRegister::apply_single(const std::string& label, const DenseMatrix& u2) {
  int p = pos(label);
  std::size_t bit = std::size_t(1) << (order_.size() - 1 - p);
  for (std::size_t r = 0; r < mat.nrows; ++r) {
    if (r & bit) continue;
    for (std::size_t c = 0; c < mat.ncols; ++c) {
      cplx v0 = mat.at(r, c), v1 = mat.at(r | bit, c);
      mat.at(r, c) = u2.at(0, 0) * v0 + u2.at(0, 1) * v1;
      mat.at(r | bit, c) = u2.at(1, 0) * v0 + u2.at(1, 1) * v1;
    }
  }
}

void QubitRegister::apply_cz_phase(const std::string& a, const std::string& b, cplx phase) {
  std::size_t bit_a = std::size_t(1) << (order_.size() - 1 - pos(a));
  std::size_t bit_b = std::size_t(1) << (order_.size() - 1 - pos(b));
  for (std::size_t r = 0; r < mat.nrows; ++r)
    if ((r & bit_a) && (r & bit_b))
      for (std::size_t c = 0; c < mat.ncols; ++c) mat.at(r, c) *= phase;
}

void QubitRegister::rename(const std::string& from, const std::string& to) {
  order_[pos(from)] = to;
}

void QubitRegister::project(const std::string& label, cplx b0, cplx b1) {
  int p = pos(label);
  std::size_t bit = std::size_t(1) << (order_.size() - 1 - p);
  DenseMatrix next(mat.nrows / 2, mat.ncols);
  std::size_t out_r = 0;
  for (std::size_t r = 0; r < mat.nrows; ++r) {
    if (r & bit) continue;
    for (std::size_t c = 0; c < mat.ncols; ++c)
      next.at(out_r, c) = b0 * mat.at(r, c) + b1 * mat.at(r | bit, c);
    ++out_r;
  }
  mat = std::move(next);
  order_.erase(order_.begin() + p);
}

DenseMatrix QubitRegister::to_matrix(const std::vector<std::string>& row_order) const {
  if (row_order.size() != order_.size())
    raise(ErrorKind::BadArgs, "row order does not cover the live qubits");
  std::vector<int> src_bit(order_.size());
  for (std::size_t i = 0; i < row_order.size(); ++i) {
    int p = pos(row_order[i]);
    src_bit[i] = static_cast<int>(order_.size() - 1 - p);
  }
  DenseMatrix out(mat.nrows, mat.ncols);
  for (std::size_t r = 0; r < mat.nrows; ++r) {
    std::size_t dst = 0;
    for (std::size_t i = 0; i < row_order.size(); ++i)
      if (r & (std::size_t(1) << src_bit[i])) dst |= std::size_t(1) << (row_order.size() - 1 - i);
    for (std::size_t c = 0; c < mat.ncols; ++c) out.at(dst, c) = mat.at(r, c);
  }
  return out;
}

DenseMatrix circuit_unitary(const CircuitIR& c) {
  validate_circuit(c);
  std::vector<std::string> ins(c.inputs.begin(), c.inputs.end());
  if (ins.size() > 12) raise(ErrorKind::TooLarge, "circuit_unitary is capped at 12 live qubits");

  QubitRegister reg(ins, std::size_t(1) << ins.size());
  for (std::size_t i = 0; i < reg.mat.nrows; ++i) reg.mat.at(i, i) = 1.0;

  for (const auto& g : c.gates) {
    if (auto* j = std::get_if<JGate>(&g)) {
      reg.apply_single(j->in, j_matrix(j->angle));
      reg.rename(j->in, j->out);
    } else if (auto* z = std::get_if<CZGate>(&g)) {
      reg.apply_cz_phase(z->a, z->b, cplx(-1, 0));
    } else if (auto* zp = std::get_if<CZPowGate>(&g)) {
      reg.apply_cz_phase(zp->a, zp->b, std::polar(1.0, zp->exponent_pi.to_double()));
    }
    if (reg.live() > 12) raise(ErrorKind::TooLarge, "circuit_unitary is capped at 12 live qubits");
  }
  std::vector<std::string> outs(c.outputs.begin(), c.outputs.end());
  return reg.to_matrix(outs);
}

bool equal_up_to_phase(const DenseMatrix& A, const DenseMatrix& B, double tol) {
  if (A.nrows != B.nrows || A.ncols != B.ncols) return false;
  std::size_t best = 0;
  double best_mag = -1;
  for (std::size_t i = 0; i < B.a.size(); ++i)
    if (std::abs(B.a[i]) > best_mag) {
      best_mag = std::abs(B.a[i]);
      best = i;
    }
  if (best_mag <= tol) return A.max_abs() <= tol;
  cplx phase = A.a[best] / B.a[best];
  double mag = std::abs(phase);
  if (std::abs(mag - 1.0) > tol) return false;
  phase /= mag;
  double worst = 0;
  for (std::size_t i = 0; i < A.a.size(); ++i)
    worst = std::max(worst, std::abs(A.a[i] - phase * B.a[i]));
  return worst < tol;
}

bool equal_up_to_phase_and_scale(const DenseMatrix& A, const DenseMatrix& B, double tol) {
  double na = A.frobenius(), nb = B.frobenius();
  if (na <= tol || nb <= tol) return na <= tol && nb <= tol;
  return equal_up_to_phase(A, B.scaled(na / nb), tol * std::max(1.0, na));
}

}  // namespace mbqc
