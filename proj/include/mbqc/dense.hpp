#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/circuit.hpp"

namespace mbqc {

using cplx = std::complex<double>;

// Dense complex matrix; for operators between qubit registers rows/cols are
// powers of two with a sorted-label big-endian tensor convention.
struct DenseMatrix {
  std::size_t nrows = 0, ncols = 0;
  std::vector<cplx> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : nrows(r), ncols(c), a(r * c, cplx(0, 0)) {}

  static DenseMatrix identity(std::size_t n);

  cplx& at(std::size_t r, std::size_t c) { return a[r * ncols + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return a[r * ncols + c]; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix dagger() const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix scaled(cplx s) const;

  double max_abs() const;
  double frobenius() const;
  // ||M^dag M - I||_max
  double unitarity_defect() const;
};

// J(alpha) = (1/sqrt2) [[e^{-ia/2}, e^{ia/2}], [e^{-ia/2}, -e^{ia/2}]]
DenseMatrix j_matrix(const Angle& alpha);
DenseMatrix rz_matrix(const Angle& alpha);
DenseMatrix h_matrix();
DenseMatrix x_matrix();
DenseMatrix y_matrix();
DenseMatrix z_matrix();
DenseMatrix s_matrix();

// Small operator-in-progress register: a 2^live x ncols matrix whose rows are
// indexed by the current qubits (position 0 = most significant bit).
class QubitRegister {
 public:
  QubitRegister(const std::vector<std::string>& initial, std::size_t ncols);

  std::size_t live() const { return order_.size(); }
  const std::vector<std::string>& order() const { return order_; }

  void add_qubit(const std::string& label, cplx amp0, cplx amp1);
  void apply_single(const std::string& label, const DenseMatrix& u2);
  // phase on basis states where both qubits are 1 (CZ family)
  void apply_cz_phase(const std::string& a, const std::string& b, cplx phase);
  void rename(const std::string& from, const std::string& to);
  // contract with <bra| = (b0, b1) on the given qubit, removing it
  void project(const std::string& label, cplx b0, cplx b1);

  // rows permuted so the tensor order equals the given label sequence
  DenseMatrix to_matrix(const std::vector<std::string>& row_order) const;

  DenseMatrix mat;  // 2^live x ncols

 private:
  std::vector<std::string> order_;
  int pos(const std::string& label) const;
};

// Product of the gate matrices in circuit order; rows indexed by sorted
// outputs, columns by sorted inputs.  Throws TooLarge above 12 live qubits.
DenseMatrix circuit_unitary(const CircuitIR& c);

// True iff A = e^{i theta} B entrywise within tol, with theta fixed from the
// largest-magnitude entry of B.
bool equal_up_to_phase(const DenseMatrix& A, const DenseMatrix& B, double tol);

// As above but additionally solving a positive scale factor from Frobenius
// norms (for comparisons against unnormalized quadratic-form sums).
bool equal_up_to_phase_and_scale(const DenseMatrix& A, const DenseMatrix& B, double tol);

}  // namespace mbqc
