#include "z2top/cohomology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "z2top/errors.hpp"

namespace z2top {

CohomologyClass zero_class(const ATModel& model, int q) {
  return {q, GF2Vector(static_cast<std::size_t>(model.betti(q)))};
}

CohomologyClass dual_of(const ATModel& model, const Simplex& generator) {
  return class_of_duals(model, {generator});
}

CohomologyClass class_of_duals(const ATModel& model,
                               const std::vector<Simplex>& generators) {
  if (generators.empty()) throw input_error("empty generator list; use zero_class");
  const int q = generators.front().dim();
  CohomologyClass cls = zero_class(model, q);
  for (const auto& g : generators) {
    if (g.dim() != q) throw input_error("mixed generator dimensions");
    const auto gens = model.generators_of_dim(q);
    auto it = std::find(gens.begin(), gens.end(), g);
    if (it == gens.end())
      throw input_error(g.to_string() + " is not a dim-" + std::to_string(q) +
                        " generator of this model");
    cls.coords.flip(static_cast<std::size_t>(it - gens.begin()));
  }
  return cls;
}

CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) {
  if (a.dim != b.dim) throw input_error("class dimension mismatch");
  a.coords ^= b.coords;
  return a;
}

std::string class_name(const ATModel& model, const CohomologyClass& cls) {
  if (cls.zero()) return "0";
  const auto gens = model.generators_of_dim(cls.dim);
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!cls.coords.get(j)) continue;
    if (!first) os << ';';
    os << gens[j].label_list();
    first = false;
  }
  return os.str();
}

CohomologyClass parse_class(const ATModel& model, const std::string& text,
                            int q) {
  CohomologyClass cls = zero_class(model, q);
  if (text.empty() || text == "0") return cls;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<int> labels;
    std::stringstream ps(part);
    std::string num;
    while (std::getline(ps, num, ',')) {
      try {
        labels.push_back(std::stoi(num));
      } catch (const std::exception&) {
        throw input_error("bad vertex label '" + num + "' in class '" + text + "'");
      }
    }
    cls = cls + dual_of(model, Simplex(labels));
  }
  return cls;
}

Chain g_star(const ATModel& model, const CohomologyClass& cls) {
  const auto gens = model.generators_of_dim(cls.dim);
  Chain gen_chain(cls.dim);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (cls.coords.get(j)) gen_chain += gens[j];
  Chain out(cls.dim);
  for (const auto& sigma : model.complex().simplices()) {
    if (sigma.dim() != cls.dim) continue;
    if (evaluate(gen_chain, model.f(sigma))) out += sigma;
  }
  return out;
}

CohomologyClass f_star(const ATModel& model, const Chain& cocycle) {
  const Chain delta = model.complex().coboundary(cocycle);
  if (!delta.zero())
    throw math_error("not a cocycle: coboundary = " + delta.to_string());
  const int q = cocycle.dim();
  const auto gens = model.generators_of_dim(q);
  CohomologyClass cls = zero_class(model, q);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (evaluate(cocycle, model.g(gens[j]))) cls.coords.set(j, true);
  return cls;
}

Chain phi_star(const ATModel& model, const Chain& cochain) {
  const int q = cochain.dim() - 1;
  Chain out(q >= 0 ? q : 0);
  if (q < 0) return out;
  for (const auto& sigma : model.complex().simplices()) {
    if (sigma.dim() != q) continue;
    if (evaluate(cochain, model.phi(sigma))) out += sigma;
  }
  return out;
}

Chain cup(const Chain& c, const Chain& cp, const FilteredComplex& k) {
  const int i = c.dim(), j = cp.dim();
  Chain out(i + j);
  for (const auto& sigma : k.simplices()) {
    if (sigma.dim() != i + j) continue;
    if (c.contains(sigma.slice(0, i)) && cp.contains(sigma.slice(i, i + j)))
      out += sigma;
  }
  return out;
}

Chain cup_n(const Chain& c, const Chain& cp, int n, const FilteredComplex& k) {
  if (n < 0) throw input_error("cup_n needs n >= 0");
  const int p = c.dim(), q = cp.dim();
  const int d = p + q - n;
  if (d < 0) return Chain(0);
  Chain out(d);
  if (c.zero() || cp.zero()) return out;

  std::vector<int> idx(n + 1);
  for (const auto& sigma : k.simplices()) {
    if (sigma.dim() != d) continue;
    const auto& verts = sigma.vertices();
    bool value = false;
    // enumerate 0 <= i_0 < ... < i_n <= d lexicographically
    for (int t = 0; t <= n; ++t) idx[t] = t;
    for (;;) {
      // block sizes first: even blocks must union to p+1 vertices,
      // odd blocks to q+1 (cochains vanish off their degree)
      int even_size = idx[0] + 1, odd_size = 0;
      for (int t = 1; t <= n; ++t) {
        const int len = idx[t] - idx[t - 1] + 1;
        (t % 2 == 1 ? odd_size : even_size) += len;
      }
      (n % 2 == 0 ? odd_size : even_size) += d - idx[n] + 1;
      if (even_size == p + 1 && odd_size == q + 1) {
        std::vector<int> even, odd;
        even.reserve(p + 1);
        odd.reserve(q + 1);
        for (int v = 0; v <= idx[0]; ++v) even.push_back(verts[v]);
        for (int t = 1; t <= n; ++t) {
          auto& dst = (t % 2 == 1) ? odd : even;
          for (int v = idx[t - 1]; v <= idx[t]; ++v) dst.push_back(verts[v]);
        }
        auto& last = ((n + 1) % 2 == 1) ? odd : even;
        for (int v = idx[n]; v <= d; ++v) last.push_back(verts[v]);
        if (c.contains(Simplex(std::move(even))) &&
            cp.contains(Simplex(std::move(odd))))
          value = !value;
      }
      // next combination
      int t = n;
      while (t >= 0 && idx[t] == d - (n - t)) --t;
      if (t < 0) break;
      ++idx[t];
      for (int u = t + 1; u <= n; ++u) idx[u] = idx[u - 1] + 1;
    }
    if (value) out += sigma;
  }
  return out;
}

std::vector<RingEntry> cohomology_ring(const ATModel& model) {
  std::vector<RingEntry> out;
  const auto& gens = model.generators();
  std::map<Simplex, Chain> lift;  // g*(dual) per generator
  std::map<Simplex, Chain> rep;   // g(gamma) per generator
  for (const auto& g : gens) {
    lift.emplace(g, g_star(model, dual_of(model, g)));
    rep.emplace(g, model.g(g));
  }
  for (const auto& a : gens)
    for (const auto& b : gens) {
      const int prod_dim = a.dim() + b.dim();
      if (model.betti(prod_dim) == 0) continue;
      const Chain product = cup(lift.at(a), lift.at(b), model.complex());
      if (product.zero()) continue;
      for (const auto& gamma : gens) {
        if (gamma.dim() != prod_dim) continue;
        if (evaluate(product, rep.at(gamma))) out.push_back({a, b, gamma});
      }
    }
  return out;
}

Chain sq_cochain(const Chain& c, int i, const FilteredComplex& k) {
  if (i < 0) throw input_error("Sq index must be >= 0");
  const int q = c.dim();
  if (i > q) return Chain(q + i);
  return cup_n(c, c, q - i, k);
}

GF2Matrix sq_matrix(const ATModel& model, int i, int q) {
  const auto gens = model.generators_of_dim(q);
  GF2Matrix m(static_cast<std::size_t>(model.betti(q + i)), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Chain lifted = g_star(model, dual_of(model, gens[j]));
    const Chain sq = sq_cochain(lifted, i, model.complex());
    const CohomologyClass cls = f_star(model, sq);
    for (std::size_t r = 0; r < m.rows(); ++r) m.set(r, j, cls.coords.get(r));
  }
  return m;
}

std::vector<CohomologyClass> sq_kernel_basis(const ATModel& model, int i,
                                             int q) {
  std::vector<CohomologyClass> out;
  for (auto& v : sq_matrix(model, i, q).null_space())
    out.push_back({q, std::move(v)});
  return out;
}

std::vector<CohomologyClass> sq_image_basis(const ATModel& model, int i,
                                            int q) {
  const GF2Matrix m = sq_matrix(model, i, q);
  std::vector<CohomologyClass> out;
  for (auto c : m.pivot_columns()) out.push_back({q + i, m.column(c)});
  return out;
}

}  // namespace z2top
