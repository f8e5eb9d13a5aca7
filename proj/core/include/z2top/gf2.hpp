#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace z2top {

/// A fixed-length bit vector over the two-element field.
class GF2Vector {
 public:
  explicit GF2Vector(std::size_t size = 0);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  bool any() const;
  bool zero() const { return !any(); }
  std::size_t popcount() const;

  GF2Vector& operator^=(const GF2Vector& rhs);
  friend GF2Vector operator^(GF2Vector lhs, const GF2Vector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

  std::string to_string() const;  // e.g. "0110"

 private:
  friend class GF2Matrix;
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

/// A dense bit matrix over GF(2), row-major with 64-bit packed rows.
/// Elimination always picks the leftmost available pivot column, so ranks,
/// echelon forms and derived bases are reproducible across runs.
class GF2Matrix {
 public:
  GF2Matrix(std::size_t rows = 0, std::size_t cols = 0);

  static GF2Matrix identity(std::size_t n);
  /// Matrix whose columns are the given equal-length vectors.
  static GF2Matrix from_columns(const std::vector<GF2Vector>& columns,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  GF2Vector row(std::size_t r) const;
  GF2Vector column(std::size_t c) const;
  GF2Matrix transposed() const;

  /// Matrix-vector product M v; requires v.size() == cols().
  GF2Vector multiply(const GF2Vector& v) const;

  std::size_t rank() const;

  /// Basis of { v : M v = 0 } derived from the reduced row echelon form,
  /// one vector per free column, in ascending free-column order.
  /// Size is cols() - rank().
  std::vector<GF2Vector> null_space() const;

  /// Indices of the leftmost independent column set (the pivot columns).
  std::vector<std::size_t> pivot_columns() const;

  /// One solution x of M x = b if consistent.
  std::optional<GF2Vector> solve(const GF2Vector& b) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

  std::string to_string() const;  // rows separated by '\n'

 private:
  void xor_row(std::size_t dst, std::size_t src);
  std::size_t rows_, cols_, stride_;
  std::vector<std::uint64_t> words_;
};

/// Canonical representative of v + colspace(M): the column space is put in
/// a fixed echelon basis and every pivot coordinate of v is eliminated.
/// Returns zero exactly when v lies in the column space of M.
/// Requires v.size() == M.rows().
GF2Vector reduce_mod_image(const GF2Vector& v, const GF2Matrix& m);

}  // namespace z2top
