#include <algorithm>

#include "ew/errors.hpp"
#include "ew/orbits.hpp"

namespace ew {
namespace {

// Kernel of ad(f) restricted to the span of the given basis vectors,
// embedded back into g.
std::vector<RVector> centralizer_within(const ChevalleyAlgebra& g, const RVector& f, const std::vector<int>& indices) {
  const RMatrix adf = g.ad(f);
  RMatrix sub(adf.rows(), indices.size());
  for (std::size_t i = 0; i < adf.rows(); ++i)
    for (std::size_t k = 0; k < indices.size(); ++k) sub(i, k) = adf(i, indices[k]);
  std::vector<RVector> out;
  for (const auto& v : nullspace(sub)) {
    RVector x(g.dim());
    for (std::size_t k = 0; k < indices.size(); ++k) x[indices[k]] = v[k];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<int> root_indices_where(const ChevalleyAlgebra& g, const std::vector<Rational>& s_values,
                                    bool (*keep)(const Rational&)) {
  std::vector<int> out;
  for (int i = 0; i < g.num_roots(); ++i)
    if (keep(root_value(g.root_of(i), s_values))) out.push_back(i);
  return out;
}

void check_s_values(const ChevalleyAlgebra& g, const std::vector<Rational>& s) {
  if (static_cast<int>(s.size()) != g.roots().rank()) throw ValidationError("S needs one value per simple root");
}

}  // namespace

void WhittakerPair::validate(const RootSystem& rs) const {
  if (static_cast<int>(s_values.size()) != rs.rank()) throw ValidationError("S needs one value per simple root");
  for (const auto& [root, charge] : phi) {
    if (!rs.is_root(root)) throw ValidationError("phi is supported on a non-root");
    if (charge.is_zero()) throw ValidationError("phi charges must be nonzero");
    if (root_value(root, s_values) != Rational(-2))
      throw ValidationError("not a Whittaker pair: a root of f_phi has S-eigenvalue " +
                            root_value(root, s_values).str() + ", expected -2");
  }
}

Rational root_value(const RootVec& beta, const std::vector<Rational>& s_values) {
  if (beta.size() != s_values.size()) throw ValidationError("root and S have different ranks");
  Rational v;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) v += Rational(beta[i]) * s_values[i];
  return v;
}

std::size_t GradedSubspace::total_dim() const {
  std::size_t n = 0;
  for (const auto& [ev, idx] : spaces) n += idx.size();
  return n;
}

std::size_t GradedSubspace::dim(const Rational& eigenvalue) const {
  auto it = spaces.find(eigenvalue);
  return it == spaces.end() ? 0 : it->second.size();
}

GradedSubspace grade_by(const ChevalleyAlgebra& g, const std::vector<Rational>& s_values) {
  check_s_values(g, s_values);
  GradedSubspace out;
  for (int i = 0; i < g.dim(); ++i)
    out.spaces[g.is_cartan(i) ? Rational(0) : root_value(g.root_of(i), s_values)].push_back(i);
  return out;
}

RVector f_phi(const ChevalleyAlgebra& g, const std::vector<RootCharge>& phi) {
  RVector f(g.dim());
  for (const auto& [root, charge] : phi) f[g.root_index(root)] += charge;
  return f;
}

std::vector<RVector> stabilizer(const ChevalleyAlgebra& g, const std::vector<RootCharge>& phi) {
  return nullspace(g.ad(f_phi(g, phi)));
}

std::vector<RVector> n_S_phi(const ChevalleyAlgebra& g, const WhittakerPair& pair) {
  pair.validate(g.roots());
  std::vector<RVector> basis;
  for (int i : root_indices_where(g, pair.s_values, [](const Rational& v) { return v > Rational(1); }))
    basis.push_back(g.basis_vector(i));
  auto ones = root_indices_where(g, pair.s_values, [](const Rational& v) { return v == Rational(1); });
  for (auto& v : centralizer_within(g, f_phi(g, pair.phi), ones)) basis.push_back(std::move(v));
  return basis;
}

std::vector<RVector> omega_radical(const ChevalleyAlgebra& g, const WhittakerPair& pair) {
  pair.validate(g.roots());
  const RVector f = f_phi(g, pair.phi);
  const auto u = root_indices_where(g, pair.s_values, [](const Rational& v) { return v >= Rational(1); });
  // omega(X_a, X_b) = (f, [X_a, X_b]); f has root components only.
  RMatrix gram(u.size(), u.size());
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < u.size(); ++b) {
      Rational v;
      for (const auto& [k, c] : g.bracket_basis(u[a], u[b])) {
        if (g.is_cartan(k)) continue;
        RootVec neg = g.root_of(k);
        for (auto& x : neg) x = -x;
        v += Rational(c) * f[g.root_index(neg)];
      }
      gram(a, b) = v;
    }
  std::vector<RVector> out;
  for (const auto& v : nullspace(gram)) {
    RVector x(g.dim());
    for (std::size_t k = 0; k < u.size(); ++k) x[u[k]] = v[k];
    out.push_back(std::move(x));
  }
  return out;
}

bool dominates(const ChevalleyAlgebra& g, const WhittakerPair& h_pair, const WhittakerPair& s_pair) {
  h_pair.validate(g.roots());
  s_pair.validate(g.roots());
  const RVector f = f_phi(g, h_pair.phi);
  if (f != f_phi(g, s_pair.phi)) throw ValidationError("dominance compares pairs with the same phi");
  std::vector<Rational> diff(h_pair.s_values.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = s_pair.s_values[i] - h_pair.s_values[i];
  const auto h_ge1 = root_indices_where(g, h_pair.s_values, [](const Rational& v) { return v >= Rational(1); });
  for (const auto& x : centralizer_within(g, f, h_ge1))
    for (int i = 0; i < g.num_roots(); ++i)
      if (!x[i].is_zero() && root_value(g.root_of(i), diff) < Rational(0)) return false;
  return true;
}

NeutralPair neutral_pair_for(const ChevalleyAlgebra& g, const std::vector<RootCharge>& support) {
  const auto& rs = g.roots();
  for (std::size_t a = 0; a < support.size(); ++a) {
    if (!rs.is_positive(support[a].root)) throw ValidationError("neutral pair roots must be positive roots");
    if (support[a].charge.is_zero()) throw ValidationError("charges must be nonzero");
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (pairing(rs, support[a].root, support[b].root) != 0)
        throw ValidationError("neutral pair support must be pairwise orthogonal (general Jacobson-Morozov is out of scope)");
  }
  NeutralPair p;
  p.e = RVector(g.dim());
  p.h = RVector(g.dim());
  p.f = RVector(g.dim());
  p.pair.s_values.assign(rs.rank(), Rational(0));
  for (const auto& [beta, c] : support) {
    RootVec neg = beta;
    for (auto& x : neg) x = -x;
    p.e[g.root_index(beta)] += Rational(1) / c;
    p.f[g.root_index(neg)] += c;
    const RVector cor = g.coroot(beta);
    for (int i = 0; i < g.dim(); ++i) p.h[i] += cor[i];
    for (int i = 0; i < rs.rank(); ++i) p.pair.s_values[i] += Rational(pairing(rs, rs.simple_roots()[i], beta));
    p.pair.phi.push_back({neg, c});
  }
  p.pair.validate(rs);
  return p;
}

NeutralPair neutral_pair_for_nodes(const ChevalleyAlgebra& g, const std::map<int, Rational>& node_charges) {
  std::vector<RootCharge> support;
  for (const auto& [node, c] : node_charges) {
    g.roots().check_node(node);
    support.push_back({g.roots().simple_roots()[node - 1], c});
  }
  return neutral_pair_for(g, support);
}

Sl2Check check_sl2(const ChevalleyAlgebra& g, const NeutralPair& p) {
  auto scaled = [](RVector v, const Rational& k) {
    for (auto& x : v) x *= k;
    return v;
  };
  Sl2Check c;
  c.he = g.bracket(p.h, p.e) == scaled(p.e, Rational(2));
  c.hf = g.bracket(p.h, p.f) == scaled(p.f, Rational(-2));
  c.ef = g.bracket(p.e, p.f) == p.h;
  return c;
}

IsotropicReport isotropic_dimension_check(const ChevalleyAlgebra& g, const NeutralPair& p, const NilpotentOrbit& orbit) {
  if (orbit.type != g.roots().type()) throw ValidationError("orbit and algebra have different types");
  IsotropicReport r;
  r.n_dim = n_S_phi(g, p.pair).size();
  r.g1_dim = grade_by(g, p.pair.s_values).dim(Rational(1));
  r.i_max = r.n_dim + r.g1_dim / 2;
  r.orbit_dim = orbit.dim;
  r.holds = r.g1_dim % 2 == 0 && 2 * static_cast<int>(r.i_max) == orbit.dim;
  return r;
}

int orbit_dimension_of(const ChevalleyAlgebra& g, const RVector& f) { return static_cast<int>(rank(g.ad(f))); }

RVector nilpotent_from_nodes(const ChevalleyAlgebra& g, const std::vector<int>& nodes) {
  RVector f(g.dim());
  for (int node : nodes) {
    g.roots().check_node(node);
    RootVec neg = g.roots().simple_roots()[node - 1];
    for (auto& x : neg) x = -x;
    f[g.root_index(neg)] += Rational(1);
  }
  return f;
}

}  // namespace ew
