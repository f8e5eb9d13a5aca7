#include "z2top/boundary_matrix.hpp"

#include <map>

namespace z2top {

GF2Matrix boundary_matrix(const FilteredComplex& k, int q) {
  const auto rows = k.simplices_of_dim(q - 1);
  const auto cols = k.simplices_of_dim(q);
  std::map<Simplex, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
  GF2Matrix m(rows.size(), cols.size());
  if (q <= 0) return m;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& f : cols[c].facets()) m.set(row_index.at(f), c, true);
  return m;
}

std::vector<int> betti_by_rank(const FilteredComplex& k) {
  std::vector<int> out;
  if (k.empty()) return out;
  std::vector<std::size_t> ranks(k.dim() + 2, 0);
  for (int q = 1; q <= k.dim(); ++q) ranks[q] = boundary_matrix(k, q).rank();
  for (int q = 0; q <= k.dim(); ++q)
    out.push_back(static_cast<int>(k.count_of_dim(q) - ranks[q] - ranks[q + 1]));
  return out;
}

}  // namespace z2top
