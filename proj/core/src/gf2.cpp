#include "z2top/gf2.hpp"

#include <bit>

#include "z2top/errors.hpp"

namespace z2top {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

GF2Vector::GF2Vector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

bool GF2Vector::get(std::size_t i) const {
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void GF2Vector::set(std::size_t i, bool value) {
  const auto mask = std::uint64_t{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

void GF2Vector::flip(std::size_t i) {
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

bool GF2Vector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t GF2Vector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& rhs) {
  if (size_ != rhs.size_) throw input_error("GF2Vector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

std::string GF2Vector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)),
      words_(rows * stride_, 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_columns(const std::vector<GF2Vector>& columns,
                                  std::size_t rows) {
  GF2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw input_error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c].get(r));
  }
  return m;
}

bool GF2Matrix::get(std::size_t r, std::size_t c) const {
  return (words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const auto mask = std::uint64_t{1} << (c % kWordBits);
  if (value)
    words_[r * stride_ + c / kWordBits] |= mask;
  else
    words_[r * stride_ + c / kWordBits] &= ~mask;
}

GF2Vector GF2Matrix::row(std::size_t r) const {
  GF2Vector v(cols_);
  for (std::size_t w = 0; w < stride_; ++w) v.words_[w] = words_[r * stride_ + w];
  return v;
}

GF2Vector GF2Matrix::column(std::size_t c) const {
  GF2Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
  return v;
}

GF2Matrix GF2Matrix::transposed() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t w = 0; w < stride_; ++w) {
      auto word = words_[r * stride_ + w];
      while (word) {
        const auto bit = std::countr_zero(word);
        t.set(w * kWordBits + bit, r, true);
        word &= word - 1;
      }
    }
  return t;
}

GF2Vector GF2Matrix::multiply(const GF2Vector& v) const {
  if (v.size() != cols_) throw input_error("matrix-vector size mismatch");
  GF2Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < stride_; ++w)
      acc ^= words_[r * stride_ + w] & v.words_[w];
    out.set(r, std::popcount(acc) % 2 == 1);
  }
  return out;
}

void GF2Matrix::xor_row(std::size_t dst, std::size_t src) {
  for (std::size_t w = 0; w < stride_; ++w)
    words_[dst * stride_ + w] ^= words_[src * stride_ + w];
}

std::size_t GF2Matrix::rank() const {
  GF2Matrix m(*this);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && !m.get(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t w = 0; w < stride_; ++w)
        std::swap(m.words_[r * stride_ + w], m.words_[pivot * stride_ + w]);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && m.get(i, c)) m.xor_row(i, r);
    ++r;
  }
  return r;
}

namespace {
// reduced row echelon form; returns pivot column per pivot row
std::vector<std::size_t> rref_in_place(GF2Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < m.cols(); ++k) {
        const bool a = m.get(r, k), b = m.get(pivot, k);
        m.set(r, k, b);
        m.set(pivot, k, a);
      }
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c))
        for (std::size_t k = 0; k < m.cols(); ++k)
          m.set(i, k, m.get(i, k) ^ m.get(r, k));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
}  // namespace

std::vector<GF2Vector> GF2Matrix::null_space() const {
  GF2Matrix m(*this);
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<GF2Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    GF2Vector v(cols_);
    v.set(free, true);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      if (m.get(pr, free)) v.set(pivots[pr], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> GF2Matrix::pivot_columns() const {
  GF2Matrix m(*this);
  return rref_in_place(m);
}

std::optional<GF2Vector> GF2Matrix::solve(const GF2Vector& b) const {
  if (b.size() != rows_) throw input_error("solve: rhs size mismatch");
  // eliminate on [M | b]
  GF2Matrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
    aug.set(r, cols_, b.get(r));
  }
  const auto pivots = rref_in_place(aug);
  GF2Vector x(cols_);
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
    if (pivots[pr] == cols_) return std::nullopt;  // pivot in the rhs column
    x.set(pivots[pr], aug.get(pr, cols_));
  }
  return x;
}

std::string GF2Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += '\n';
    out += row(r).to_string();
  }
  return out;
}

GF2Vector reduce_mod_image(const GF2Vector& v, const GF2Matrix& m) {
  if (v.size() != m.rows())
    throw input_error("reduce_mod_image: vector length " +
                      std::to_string(v.size()) + " != matrix rows " +
                      std::to_string(m.rows()));
  // column space of M = row space of M^T; reduce v against its echelon basis
  GF2Matrix rt = m.transposed();
  const auto pivots = rref_in_place(rt);
  GF2Vector out = v;
  for (std::size_t pr = 0; pr < pivots.size(); ++pr)
    if (out.get(pivots[pr])) out ^= rt.row(pr);
  return out;
}

}  // namespace z2top
