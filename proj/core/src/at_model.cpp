#include "z2top/at_model.hpp"

#include <algorithm>
#include <set>

#include "z2top/errors.hpp"

namespace z2top {

TauStrategy tau_strategy_from_string(const std::string& name) {
  if (name == "largest") return TauStrategy::Largest;
  if (name == "smallest") return TauStrategy::Smallest;
  throw input_error("unknown tau strategy '" + name + "' (largest|smallest)");
}

std::string to_string(TauStrategy s) {
  return s == TauStrategy::Largest ? "largest" : "smallest";
}

std::string ContractionViolation::to_string() const {
  return identity + " at " + at.to_string() +
         (detail.empty() ? "" : ": " + detail);
}

ATModel::ATModel(FilteredComplex complex, TauStrategy strategy)
    : complex_(std::move(complex)), strategy_(strategy) {
  build();
}

void ATModel::build() {
  const std::size_t m = complex_.size();
  f_.assign(m, Chain());
  phi_.assign(m, Chain());

  std::set<std::size_t> live;  // indices of current generators
  // inverted f-support: for each live generator index, the x with gen in f(x)
  std::map<std::size_t, std::set<std::size_t>> holders;

  for (std::size_t i = 0; i < m; ++i) {
    const Simplex& sigma = complex_.simplex(i);
    Chain u(sigma.dim() > 0 ? sigma.dim() - 1 : 0);
    Chain phi_bd(sigma.dim());
    for (const auto& facet : boundary(sigma).support()) {
      const auto fi = complex_.index_of(facet);
      u += f_[fi];
      phi_bd += phi_[fi];
    }
    if (u.zero()) {
      // sigma creates a cycle and survives as a generator
      f_[i] = Chain::single(sigma);
      live.insert(i);
      holders[i].insert(i);
      continue;
    }
    // sigma destroys the cycle generated by boundary(sigma): eliminate tau
    std::size_t tau = complex_.index_of(u.support().front());
    for (const auto& gen : u.support()) {
      const auto gi = complex_.index_of(gen);
      if (strategy_ == TauStrategy::Largest ? gi > tau : gi < tau) tau = gi;
    }
    live.erase(tau);
    Chain phi_update = Chain::single(sigma) + phi_bd;
    const std::set<std::size_t> affected = holders[tau];
    for (const auto x : affected) {
      f_[x] += u;
      phi_[x] += phi_update;
      // membership of every generator of u in f(x) just flipped
      for (const auto& gen : u.support()) {
        const auto gi = complex_.index_of(gen);
        if (gi == tau) continue;
        auto& hs = holders[gi];
        if (!hs.erase(x)) hs.insert(x);
      }
    }
    holders.erase(tau);
  }

  for (auto i : live) generators_.push_back(complex_.simplex(i));
  // position of each generator within its dimension, for class coordinates
  std::map<int, std::size_t> per_dim;
  for (const auto& g : generators_) generator_pos_[g] = per_dim[g.dim()]++;
}

ATModel ATModel::from_parts(FilteredComplex complex, std::map<Simplex, Chain> f,
                            std::map<Simplex, Chain> phi,
                            std::vector<Simplex> generators) {
  ATModel m;
  m.complex_ = std::move(complex);
  const std::size_t n = m.complex_.size();
  m.f_.assign(n, Chain());
  m.phi_.assign(n, Chain());
  for (auto& [s, c] : f) m.f_[m.complex_.index_of(s)] = std::move(c);
  for (auto& [s, c] : phi) m.phi_[m.complex_.index_of(s)] = std::move(c);
  for (const auto& g : generators)
    m.complex_.index_of(g);  // membership check
  m.generators_ = std::move(generators);
  std::sort(m.generators_.begin(), m.generators_.end(),
            [&](const Simplex& a, const Simplex& b) {
              return m.complex_.index_of(a) < m.complex_.index_of(b);
            });
  std::map<int, std::size_t> per_dim;
  for (const auto& g : m.generators_) m.generator_pos_[g] = per_dim[g.dim()]++;
  return m;
}

Chain ATModel::f(const Simplex& s) const { return f_[complex_.index_of(s)]; }

Chain ATModel::f(const Chain& a) const {
  Chain out(a.dim());
  for (const auto& s : a.support()) out += f_[complex_.index_of(s)];
  return out;
}

Chain ATModel::phi(const Simplex& s) const { return phi_[complex_.index_of(s)]; }

Chain ATModel::phi(const Chain& a) const {
  Chain out(a.dim() + 1);
  for (const auto& s : a.support()) out += phi_[complex_.index_of(s)];
  return out;
}

std::vector<Simplex> ATModel::generators_of_dim(int q) const {
  std::vector<Simplex> out;
  for (const auto& g : generators_)
    if (g.dim() == q) out.push_back(g);
  return out;
}

bool ATModel::is_generator(const Simplex& s) const {
  return generator_pos_.count(s) > 0;
}

int ATModel::betti(int q) const {
  int n = 0;
  for (const auto& g : generators_)
    if (g.dim() == q) ++n;
  return n;
}

Chain ATModel::g(const Simplex& generator) const {
  if (!is_generator(generator))
    throw math_error(generator.to_string() + " is not a homology generator");
  return Chain::single(generator) + phi(boundary(generator));
}

Chain ATModel::g(const Chain& generator_chain) const {
  Chain out(generator_chain.dim());
  for (const auto& s : generator_chain.support()) out += g(s);
  return out;
}

Chain ATModel::homology_class(const Chain& cycle) const {
  Chain bd = boundary(cycle);
  if (!bd.zero())
    throw math_error("not a cycle: boundary = " + bd.to_string());
  return f(cycle);
}

GF2Vector ATModel::class_coordinates(const Chain& cycle) const {
  const Chain cls = homology_class(cycle);
  GF2Vector coords(betti(cycle.dim()));
  for (const auto& gen : cls.support()) coords.set(generator_pos_.at(gen), true);
  return coords;
}

Chain ATModel::boundary_witness(const Chain& cycle) const {
  const Chain cls = homology_class(cycle);  // also rejects non-cycles
  if (!cls.zero())
    throw math_error("not a boundary: class = " + cls.to_string());
  Chain witness = phi(cycle);
  if (!(boundary(witness) == cycle))
    throw math_error("witness check failed for " + cycle.to_string());
  return witness;
}

std::vector<std::pair<Simplex, Chain>> ATModel::f_entries() const {
  std::vector<std::pair<Simplex, Chain>> out;
  for (std::size_t i = 0; i < complex_.size(); ++i)
    if (!f_[i].zero()) out.emplace_back(complex_.simplex(i), f_[i]);
  return out;
}

std::vector<std::pair<Simplex, Chain>> ATModel::phi_entries() const {
  std::vector<std::pair<Simplex, Chain>> out;
  for (std::size_t i = 0; i < complex_.size(); ++i)
    if (!phi_[i].zero()) out.emplace_back(complex_.simplex(i), phi_[i]);
  return out;
}

std::vector<ContractionViolation> verify_contraction(const ATModel& model) {
  std::vector<ContractionViolation> out;
  const auto& k = model.complex();
  for (const auto& sigma : k.simplices()) {
    const Chain fs = model.f(sigma);
    for (const auto& gen : fs.support())
      if (!model.is_generator(gen))
        out.push_back({"f-image", sigma,
                       "f hits non-generator " + gen.to_string()});
    if (!model.f(boundary(sigma)).zero())
      out.push_back({"f-chain-map", sigma,
                     "f(boundary) = " + model.f(boundary(sigma)).to_string()});
    Chain lhs = Chain::single(sigma) + model.g(fs);
    Chain rhs = boundary(model.phi(sigma)) + model.phi(boundary(sigma));
    if (!(lhs == rhs))
      out.push_back({"homotopy", sigma,
                     "1 + gf = " + lhs.to_string() +
                         " but d.phi + phi.d = " + rhs.to_string()});
    if (!model.f(model.phi(sigma)).zero())
      out.push_back({"f-phi", sigma, ""});
    if (!model.phi(model.phi(sigma)).zero())
      out.push_back({"phi-phi", sigma, ""});
  }
  for (const auto& gamma : model.generators()) {
    const Chain rep = model.g(gamma);
    if (!(model.f(rep) == Chain::single(gamma)))
      out.push_back({"fg", gamma, "f(g) = " + model.f(rep).to_string()});
    if (!model.phi(rep).zero())
      out.push_back({"phi-g", gamma, ""});
    if (!boundary(rep).zero())
      out.push_back({"g-chain-map", gamma,
                     "boundary(g) = " + boundary(rep).to_string()});
  }
  return out;
}

std::vector<GF2Matrix> induced_homology_map(const VertexMap& vm,
                                            const ATModel& source,
                                            const ATModel& target) {
  if (!(vm.source() == source.complex()))
    throw input_error("vertex map source differs from the source model");
  if (!(vm.target() == target.complex()))
    throw input_error("vertex map target differs from the target model");
  const int top = source.complex().dim();
  std::vector<GF2Matrix> out;
  for (int q = 0; q <= top; ++q) {
    const auto gens = source.generators_of_dim(q);
    GF2Matrix m(target.betti(q), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const GF2Vector col = target.class_coordinates(vm.apply(source.g(gens[j])));
      for (std::size_t r = 0; r < col.size(); ++r) m.set(r, j, col.get(r));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace z2top
