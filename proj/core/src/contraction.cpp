#include "z2top/contraction.hpp"

#include <algorithm>
#include <set>

#include "z2top/errors.hpp"

namespace z2top {

namespace {

Chain lookup(const std::map<Simplex, Chain>& m, const Simplex& s, int zero_dim) {
  auto it = m.find(s);
  return it == m.end() ? Chain(zero_dim) : it->second;
}

Chain lift(const std::map<Simplex, Chain>& m, const Chain& a, int zero_dim) {
  Chain out(zero_dim);
  for (const auto& s : a.support()) out += lookup(m, s, zero_dim);
  return out;
}

}  // namespace

Chain Contraction::apply_f(const Simplex& s) const {
  return lookup(f, s, s.dim());
}
Chain Contraction::apply_f(const Chain& a) const { return lift(f, a, a.dim()); }
Chain Contraction::apply_g(const Simplex& s) const {
  return lookup(g, s, s.dim());
}
Chain Contraction::apply_g(const Chain& a) const { return lift(g, a, a.dim()); }
Chain Contraction::apply_phi(const Simplex& s) const {
  return lookup(phi, s, s.dim() + 1);
}
Chain Contraction::apply_phi(const Chain& a) const {
  return lift(phi, a, a.dim() + 1);
}

Chain Contraction::target_boundary(const Simplex& s) const {
  if (target_zero_differential) return Chain(s.dim() > 0 ? s.dim() - 1 : 0);
  return boundary(s);
}

FilteredComplex Contraction::target_complex() const {
  if (target_zero_differential)
    throw input_error("target is a homology basis, not a simplicial complex");
  return FilteredComplex::from_filtration(target_cells);
}

Contraction Contraction::identity(const FilteredComplex& k) {
  Contraction c;
  c.source = k;
  c.target_cells = k.simplices();
  for (const auto& s : k.simplices()) {
    c.f[s] = Chain::single(s);
    c.g[s] = Chain::single(s);
  }
  return c;
}

Contraction Contraction::from_model(const ATModel& model) {
  Contraction c;
  c.source = model.complex();
  c.target_cells = model.generators();
  c.target_zero_differential = true;
  for (auto& [s, img] : model.f_entries()) c.f[s] = img;
  for (auto& [s, img] : model.phi_entries()) c.phi[s] = img;
  for (const auto& gamma : model.generators()) c.g[gamma] = model.g(gamma);
  return c;
}

std::vector<ContractionViolation> verify(const Contraction& c) {
  std::vector<ContractionViolation> out;
  for (const auto& sigma : c.source.simplices()) {
    const Chain fs = c.apply_f(sigma);
    Chain target_bd(sigma.dim() > 0 ? sigma.dim() - 1 : 0);
    for (const auto& t : fs.support()) target_bd += c.target_boundary(t);
    if (!(c.apply_f(boundary(sigma)) == target_bd))
      out.push_back({"f-chain-map", sigma,
                     "f(d sigma) = " + c.apply_f(boundary(sigma)).to_string() +
                         " but d(f sigma) = " + target_bd.to_string()});
    const Chain lhs = Chain::single(sigma) + c.apply_g(fs);
    const Chain rhs =
        boundary(c.apply_phi(sigma)) + c.apply_phi(boundary(sigma));
    if (!(lhs == rhs))
      out.push_back({"homotopy", sigma,
                     "1 + gf = " + lhs.to_string() +
                         " but d.phi + phi.d = " + rhs.to_string()});
    if (!c.apply_f(c.apply_phi(sigma)).zero())
      out.push_back({"f-phi", sigma, ""});
    if (!c.apply_phi(c.apply_phi(sigma)).zero())
      out.push_back({"phi-phi", sigma, ""});
  }
  for (const auto& tau : c.target_cells) {
    if (!(c.apply_f(c.apply_g(tau)) == Chain::single(tau)))
      out.push_back({"fg", tau,
                     "f(g) = " + c.apply_f(c.apply_g(tau)).to_string()});
    if (!c.apply_phi(c.apply_g(tau)).zero())
      out.push_back({"phi-g", tau, ""});
    if (!(c.apply_g(c.target_boundary(tau)) == boundary(c.apply_g(tau))))
      out.push_back({"g-chain-map", tau,
                     "g(d tau) = " + c.apply_g(c.target_boundary(tau)).to_string() +
                         " but d(g tau) = " + boundary(c.apply_g(tau)).to_string()});
  }
  return out;
}

namespace {

void require_verified(const Contraction& c, const std::string& what) {
  auto bad = verify(c);
  if (!bad.empty())
    throw math_error(what + " failed verification: " + bad.front().to_string());
}

}  // namespace

std::pair<FilteredComplex, Contraction> collapse_thinning(
    const FilteredComplex& k) {
  const std::size_t m = k.size();
  std::vector<bool> alive(m, true);

  Contraction acc = Contraction::identity(k);

  // alive cofacet counts; a simplex is maximal iff its count is 0 and free
  // iff its count is 1 (a higher coface always contributes >= 2 cofacets)
  std::vector<int> cofacets(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& fc : k.simplex(j).facets()) ++cofacets[k.index_of(fc)];
  auto remove = [&](std::size_t i) {
    alive[i] = false;
    for (const auto& fc : k.simplex(i).facets()) --cofacets[k.index_of(fc)];
  };

  for (;;) {
    // first maximal simplex in filtration order owning a free facet
    std::size_t sigma_i = m, facet_i = m;
    for (std::size_t j = 0; j < m && sigma_i == m; ++j) {
      if (!alive[j] || cofacets[j] != 0) continue;  // not maximal
      const auto& sigma = k.simplex(j);
      if (sigma.dim() == 0) continue;
      std::size_t best = m;
      for (const auto& fc : sigma.facets()) {
        const auto fi = k.index_of(fc);
        if (alive[fi] && cofacets[fi] == 1 && fi < best) best = fi;
      }
      if (best != m) {
        sigma_i = j;
        facet_i = best;
      }
    }
    if (sigma_i == m) break;

    const Simplex& sigma = k.simplex(sigma_i);
    const Simplex& free_face = k.simplex(facet_i);
    remove(sigma_i);
    remove(facet_i);

    // step maps: f(free) = free + d(sigma), f(sigma) = 0, phi(free) = sigma.
    // Fold the step into the accumulator: phi += g(sigma) wherever the
    // accumulated f-image contains the free face, then rewrite f-images.
    const Chain bd = boundary(sigma);
    const Chain g_sigma = acc.apply_g(sigma);
    for (auto& [x, fx] : acc.f) {
      if (fx.contains(free_face)) {
        acc.phi[x] = lookup(acc.phi, x, x.dim() + 1) + g_sigma;
        fx += bd;  // removes the free face, toggles the other facets
      }
      if (fx.contains(sigma)) fx += sigma;
    }
    // prune phi entries that became zero to keep the absent-means-zero shape
    for (auto it = acc.phi.begin(); it != acc.phi.end();) {
      if (it->second.zero())
        it = acc.phi.erase(it);
      else
        ++it;
    }
    acc.g.erase(sigma);
    acc.g.erase(free_face);
  }

  std::vector<Simplex> remaining;
  for (std::size_t i = 0; i < m; ++i)
    if (alive[i]) remaining.push_back(k.simplex(i));
  FilteredComplex thinned = FilteredComplex::from_filtration(remaining);
  acc.target_cells = remaining;

  require_verified(acc, "collapse thinning of " + std::to_string(m) +
                            "-simplex complex");
  return {std::move(thinned), std::move(acc)};
}

namespace {

Simplex join(std::vector<int> verts, std::initializer_list<int> extra) {
  for (int v : extra) verts.push_back(v);
  return Simplex(std::move(verts));
}

}  // namespace

bool edge_contractible(const FilteredComplex& k, const Simplex& edge) {
  if (edge.dim() != 1) throw input_error("edge expected, got " + edge.to_string());
  if (!k.contains(edge))
    throw input_error("edge " + edge.to_string() + " not in complex");
  const int a = edge.vertices()[0], b = edge.vertices()[1];
  const auto lk_a = k.link({Simplex{a}});
  const auto lk_b = k.link({Simplex{b}});
  const auto lk_t = k.link({edge});
  std::set<Simplex> meet;
  for (const auto& s : lk_a)
    if (lk_b.count(s)) meet.insert(s);
  return meet == lk_t;
}

std::pair<FilteredComplex, Contraction> edge_contract(const FilteredComplex& k,
                                                      const Simplex& edge,
                                                      int new_label) {
  if (!edge_contractible(k, edge))
    throw math_error("link condition fails for " + edge.to_string() +
                     ": Lk a ∩ Lk b != Lk ab");
  const int a = edge.vertices()[0], b = edge.vertices()[1];
  for (const auto& s : k.simplices())
    if (s.dim() == 0 && s.vertices()[0] == new_label && new_label != a &&
        new_label != b)
      throw input_error("new label " + std::to_string(new_label) +
                        " already names a vertex");

  const auto lk_a = k.link({Simplex{a}});
  const auto lk_b = k.link({Simplex{b}});
  const auto lk_t = k.link({edge});

  std::map<int, int> relabel{{a, new_label}, {b, new_label}};

  // image complex
  std::set<Simplex> image;
  for (const auto& s : k.simplices()) {
    std::set<int> verts;
    for (int v : s.vertices()) verts.insert(v == a || v == b ? new_label : v);
    image.insert(Simplex(std::vector<int>(verts.begin(), verts.end())));
  }
  std::vector<Simplex> order(image.begin(), image.end());
  std::sort(order.begin(), order.end(), DimLexLess{});
  FilteredComplex target = FilteredComplex::from_filtration(order);

  VertexMap vm(relabel, k, target);

  Contraction c;
  c.source = k;
  c.target_cells = target.simplices();
  for (const auto& s : k.simplices()) {
    Chain img = vm.apply(s);
    if (!img.zero()) c.f[s] = std::move(img);
  }

  // The empty simplex counts as a member of every link here: it is the
  // facet of a vertex, and the rules below extend uniformly down to it
  // (g<c> = <a> and phi<b> = <a,b> are the empty-omega instances).
  for (const auto& t : target.simplices()) {
    if (!t.has_vertex(new_label)) {
      c.g[t] = Chain::single(t);
      continue;
    }
    std::vector<int> omega;
    for (int v : t.vertices())
      if (v != new_label) omega.push_back(v);
    if (omega.empty()) {
      c.g[t] = Chain::single(Simplex{a});
      continue;
    }
    if (lk_a.count(Simplex(omega))) {
      c.g[t] = Chain::single(join(omega, {a}));
      continue;
    }
    // omega in Lk b − Lk ab: base term plus one correction per facet of
    // omega lying in Lk ab
    Chain val = Chain::single(join(omega, {b}));
    if (omega.size() == 1) {
      val += edge;
    } else {
      for (std::size_t i = 0; i < omega.size(); ++i) {
        std::vector<int> facet;
        for (std::size_t j = 0; j < omega.size(); ++j)
          if (j != i) facet.push_back(omega[j]);
        if (lk_t.count(Simplex(facet))) val += join(std::move(facet), {a, b});
      }
    }
    c.g[t] = std::move(val);
  }

  for (const auto& s : k.simplices()) {
    if (!s.has_vertex(b) || s.has_vertex(a)) continue;
    std::vector<int> prefix;
    for (int v : s.vertices())
      if (v != b) prefix.push_back(v);
    if (prefix.empty() || lk_t.count(Simplex(prefix)))
      c.phi[s] = Chain::single(join(std::move(prefix), {a, b}));
  }

  require_verified(c, "edge contraction of " + edge.to_string());
  return {std::move(target), std::move(c)};
}

Contraction cone_contraction(const Simplex& sigma) {
  const int apex = sigma.vertices().front();
  Contraction c;
  c.source = FilteredComplex::close({sigma});
  c.target_cells = {Simplex{apex}};
  for (const auto& s : c.source.simplices()) {
    if (s.dim() == 0) c.f[s] = Chain::single(Simplex{apex});
    if (!s.has_vertex(apex)) {
      std::vector<int> verts = s.vertices();
      verts.push_back(apex);
      c.phi[s] = Chain::single(Simplex(std::move(verts)));
    }
  }
  c.g[Simplex{apex}] = Chain::single(Simplex{apex});
  require_verified(c, "cone contraction of " + sigma.to_string());
  return c;
}

Contraction compose(const Contraction& first, const Contraction& second) {
  if (first.target_zero_differential)
    throw input_error("cannot compose past a homology-basis target");
  std::set<Simplex> mid(first.target_cells.begin(), first.target_cells.end());
  std::set<Simplex> src2(second.source.simplices().begin(),
                         second.source.simplices().end());
  if (mid != src2)
    throw input_error("compose: middle complexes differ");

  Contraction c;
  c.source = first.source;
  c.target_cells = second.target_cells;
  c.target_zero_differential = second.target_zero_differential;
  for (const auto& s : first.source.simplices()) {
    Chain fs = second.apply_f(first.apply_f(s));
    if (!fs.zero()) c.f[s] = std::move(fs);
    Chain ph = first.apply_phi(s) +
               first.apply_g(second.apply_phi(first.apply_f(s)));
    if (!ph.zero()) c.phi[s] = std::move(ph);
  }
  for (const auto& t : second.target_cells) {
    Chain gt = first.apply_g(second.apply_g(t));
    if (!gt.zero()) c.g[t] = std::move(gt);
  }
  require_verified(c, "composition");
  return c;
}

}  // namespace z2top
