#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mbqc {

// Dense bit matrix over GF(2), row-major packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

  static Gf2Matrix identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1ull;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    uint64_t& w = bits_[r * stride_ + c / 64];
    uint64_t mask = 1ull << (c % 64);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }

  Gf2Matrix operator+(const Gf2Matrix& o) const;  // XOR
  Gf2Matrix operator*(const Gf2Matrix& o) const;
  bool operator==(const Gf2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }

  bool is_zero() const {
    for (uint64_t w : bits_)
      if (w) return false;
    return true;
  }

  void xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t j = 0; j < stride_; ++j) bits_[dst * stride_ + j] ^= bits_[src * stride_ + j];
  }
  // dst row of *this ^= src row of other (column counts must match)
  void xor_row_into_from(const Gf2Matrix& other, std::size_t src, std::size_t dst) {
    for (std::size_t j = 0; j < stride_; ++j)
      bits_[dst * stride_ + j] ^= other.bits_[src * other.stride_ + j];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < stride_; ++j)
      std::swap(bits_[a * stride_ + j], bits_[b * stride_ + j]);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<uint64_t> bits_;
};

// Gauss-Jordan inversion; nullopt for singular matrices.
std::optional<Gf2Matrix> gf2_inverse(const Gf2Matrix& m);

}  // namespace mbqc
