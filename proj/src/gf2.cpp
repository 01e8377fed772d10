#include "mbqc/gf2.hpp"

#include "mbqc/errors.hpp"

namespace mbqc {

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::BadArgs, "gf2 shape mismatch");
  Gf2Matrix r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] ^= o.bits_[i];
  return r;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (cols_ != o.rows_) raise(ErrorKind::BadArgs, "gf2 shape mismatch");
  Gf2Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k)) r.xor_row_into_from(o, k, i);
  return r;
}

std::optional<Gf2Matrix> gf2_inverse(const Gf2Matrix& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::BadArgs, "gf2_inverse requires a square matrix");
  std::size_t n = m.rows();
  Gf2Matrix a = m;
  Gf2Matrix inv = Gf2Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a.get(pivot, col)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      a.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
    }
    for (std::size_t r = 0; r < n; ++r)
      if (r != col && a.get(r, col)) {
        a.xor_row_into(col, r);
        inv.xor_row_into(col, r);
      }
  }
  return inv;
}

}  // namespace mbqc
