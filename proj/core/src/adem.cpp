#include "z2top/adem.hpp"

#include <array>

#include "z2top/errors.hpp"

namespace z2top {

namespace {

// Five terms, four triangular faces each, as vertex-index triples into an
// ascending 5-simplex <v0,...,v5>. Repeated faces are kept as printed; over
// GF(2) a squared factor equals the factor itself.
constexpr std::array<std::array<std::array<int, 3>, 4>, 5> kE3Terms{{
    {{{0, 2, 3}, {0, 1, 2}, {3, 4, 5}, {2, 3, 5}}},
    {{{0, 4, 5}, {3, 4, 5}, {0, 1, 2}, {0, 1, 2}}},
    {{{0, 1, 5}, {3, 4, 5}, {1, 2, 3}, {1, 2, 3}}},
    {{{0, 1, 2}, {2, 4, 5}, {2, 3, 4}, {2, 3, 4}}},
    {{{0, 1, 2}, {2, 3, 5}, {3, 4, 5}, {3, 4, 5}}},
}};

}  // namespace

Chain e3(const Chain& c, const FilteredComplex& k) {
  if (c.dim() != 2) throw input_error("E3 takes a 2-cochain");
  Chain out(5);
  if (c.zero()) return out;
  for (const auto& sigma : k.simplices()) {
    if (sigma.dim() != 5) continue;
    const auto& v = sigma.vertices();
    bool value = false;
    for (const auto& term : kE3Terms) {
      bool product = true;
      for (const auto& tri : term)
        if (!c.contains(Simplex{v[tri[0]], v[tri[1]], v[tri[2]]})) {
          product = false;
          break;
        }
      if (product) value = !value;
    }
    if (value) out += sigma;
  }
  return out;
}

Chain psi2_cocycle(const ATModel& model, const CohomologyClass& cls) {
  if (cls.dim != 2)
    throw math_error("Psi_q is only available for q = 2 (no explicit E_{3q-3} "
                     "formula beyond it); got a class of dimension " +
                     std::to_string(cls.dim));
  const GF2Vector sq2 = sq_matrix(model, 2, 2).multiply(cls.coords);
  if (sq2.any())
    throw math_error("class " + class_name(model, cls) +
                     " is not in ker Sq^2: Sq^2 = " +
                     class_name(model, CohomologyClass{4, sq2}));

  const auto& k = model.complex();
  const Chain c = g_star(model, cls);
  const Chain delta_b = cup(c, c, k);
  const Chain b = phi_star(model, delta_b);
  if (!(k.coboundary(b) == delta_b))
    throw math_error("phi*(c cup c) is not a coboundary witness: delta(b) = " +
                     k.coboundary(b).to_string() + " but c cup c = " +
                     delta_b.to_string());
  const Chain delta_eta = cup_n(c, c, 1, k);

  Chain w = e3(c, k);
  w += cup_n(b, b, 1, k);
  w += cup_n(b, delta_b, 2, k);
  w += cup(c, delta_eta, k);

  const Chain not_closed = k.coboundary(w);
  if (!not_closed.zero())
    throw math_error("Psi_2 witness is not a cocycle (coboundary " +
                     not_closed.to_string() +
                     "); the E3 relation does not hold on this complex");
  return w;
}

Psi2Result psi2(const ATModel& model, const CohomologyClass& cls) {
  Psi2Result result;
  result.input = cls;
  result.w_cochain = psi2_cocycle(model, cls);
  result.w_class = f_star(model, result.w_cochain);
  result.image_basis = sq_image_basis(model, 2, 3);

  std::vector<GF2Vector> columns;
  for (const auto& img : result.image_basis) columns.push_back(img.coords);
  const GF2Matrix image = GF2Matrix::from_columns(
      columns, static_cast<std::size_t>(model.betti(5)));
  result.coset_rep = reduce_mod_image(result.w_class.coords, image);
  result.is_zero = !result.coset_rep.any();
  return result;
}

}  // namespace z2top
