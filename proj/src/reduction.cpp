#include "ew/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <thread>

#include "ew/errors.hpp"

namespace ew {
namespace {

const char* const kDefaultSlots[] = {"m", "n", "p", "q", "r", "t", "u", "v"};

std::string key_string(const std::vector<int>& key) {
  std::string s = "[";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(key[i]);
  }
  return s + "]";
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

AffineArg pair_root(const RootVec& root, const AffineWeight& lambda) {
  AffineArg p = AffineArg::constant(Rational(0));
  for (std::size_t k = 0; k < root.size(); ++k)
    if (root[k] != 0) p = p + Rational(root[k]) * lambda.coords[k];
  return p;
}

// Applies the word w = s_{word[0]} s_{word[1]} ... to a root.
RootVec apply_word(const RootSystem& rs, std::span<const std::uint8_t> word, RootVec r) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = rs.reflect(*it, r);
  return r;
}

// Raw intertwiner from w(rho): alpha > 0 is inverted by w^{-1} iff <alpha|w rho> < 0.
XiProduct raw_intertwiner(const RootSystem& rs, const std::vector<int>& rho_image, const AffineWeight& lambda) {
  XiProduct p;
  for (const auto& a : rs.positive_roots()) {
    int d = 0;
    for (std::size_t k = 0; k < a.size(); ++k) d += a[k] * rho_image[k];
    if (d < 0) p *= XiProduct::rank_one_ratio(pair_root(a, lambda));
  }
  return p;
}

bool nongeneric(const AffineArg& p) {
  return p.is_constant() && (p.intercept.is_zero() || p.intercept == Rational(1, 2));
}

struct TermOutcome {
  enum { Kept, NonGeneric, Order } status;
  TermExpr term;
};

TermOutcome build_term(const EisensteinSpec& spec, const CharacterSupport& support,
                       const std::vector<std::vector<int>>& components, const CosetTable& table, std::size_t i) {
  const RootSystem& rs = *spec.rs;
  auto word = table.word(i);
  std::map<int, AffineArg> params;
  for (int node : support.nodes()) {
    RootVec img = apply_word(rs, word, rs.simple_roots()[node - 1]);
    params[node] = Rational(1, 2) * (pair_root(img, spec.lambda) + Rational(1));
    if (nongeneric(params[node])) return {TermOutcome::NonGeneric, {}};
  }
  TermExpr t;
  t.coset_id = key_string(table.key(i));
  t.xi = raw_intertwiner(rs, table.rho_image(i), spec.lambda);
  for (const auto& comp : components) {
    BFactor b;
    for (int node : comp) {
      b.nodes.push_back(node);
      b.charges.push_back(support.charges.at(node));
      b.params.push_back(params.at(node));
    }
    t.bfactors.push_back(std::move(b));
  }
  if (t.generic_order() > 0) return {TermOutcome::Order, {}};
  return {TermOutcome::Kept, canonicalize(t)};
}

}  // namespace

CharacterSupport CharacterSupport::parse(std::string_view text) {
  CharacterSupport out;
  std::stringstream ss{std::string(text)};
  std::string item;
  std::size_t index = 0;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto colon = item.find(':');
    std::string node_text = trim(item.substr(0, colon));
    int node = 0;
    try {
      std::size_t used = 0;
      node = std::stoi(node_text, &used);
      if (used != node_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("bad support node '" + node_text + "'");
    }
    std::string slot = colon == std::string::npos ? std::string(kDefaultSlots[index % 8]) : trim(item.substr(colon + 1));
    if (slot.empty() || slot == "0") throw ValidationError("support node " + node_text + " needs a nonzero charge");
    if (!out.charges.emplace(node, slot).second) throw ValidationError("support node " + node_text + " repeated");
    ++index;
  }
  return out;
}

CharacterSupport CharacterSupport::from_nodes(const std::vector<int>& nodes) {
  CharacterSupport out;
  std::size_t index = 0;
  for (int n : nodes) out.charges.emplace(n, kDefaultSlots[index++ % 8]);
  return out;
}

std::vector<int> CharacterSupport::nodes() const {
  std::vector<int> out;
  for (const auto& [n, _] : charges) out.push_back(n);
  return out;
}

std::string CharacterSupport::str() const {
  std::string s;
  for (const auto& [n, c] : charges) {
    if (!s.empty()) s += ',';
    s += std::to_string(n) + ":" + c;
  }
  return s;
}

std::vector<std::vector<int>> support_components(const RootSystem& rs, const CharacterSupport& support) {
  auto nodes = support.nodes();
  for (int n : nodes) rs.check_node(n);
  std::vector<std::vector<int>> comps;
  std::vector<bool> used(nodes.size(), false);
  const auto& c = rs.cartan_matrix();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> comp{nodes[i]};
    used[i] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t j = 0; j < nodes.size(); ++j)
        if (!used[j] && c[comp[head] - 1][nodes[j] - 1] == -1) {
          used[j] = true;
          comp.push_back(nodes[j]);
        }
    std::sort(comp.begin(), comp.end());
    if (comp.size() > 2)
      throw ValidationError("support component {" + [&] {
        std::string s;
        for (int n : comp) s += (s.empty() ? "" : ",") + std::to_string(n);
        return s;
      }() + "} is not of type A1 or A2; only A1 and A2 building blocks are available");
    comps.push_back(std::move(comp));
  }
  return comps;
}

EisensteinSpec EisensteinSpec::degenerate(RootSystemPtr rs, int node) {
  EisensteinSpec spec;
  spec.lambda = eisenstein_weight(*rs, node);
  spec.rs = std::move(rs);
  spec.inducing_node = node;
  return spec;
}

std::vector<int> EisensteinSpec::levi() const {
  if (!inducing_node) throw ValidationError("weight is not of the form 2s*Lambda_i - rho; no Levi is defined");
  std::vector<int> out;
  for (int j = 1; j <= rs->rank(); ++j)
    if (j != *inducing_node) out.push_back(j);
  return out;
}

XiProduct intertwiner(const RootSystem& rs, const WeylElement& w, const AffineWeight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank()) throw ValidationError("weight has wrong length");
  return canonicalize(raw_intertwiner(rs, w.act(std::vector<int>(rs.rank(), 1)), lambda));
}

std::map<int, AffineArg> restricted_parameters(const RootSystem& rs, const WeylElement& w, const AffineWeight& lambda,
                                               const std::vector<int>& support) {
  std::map<int, AffineArg> out;
  for (int node : support) {
    rs.check_node(node);
    RootVec img = act_on_root(rs, w, rs.simple_roots()[node - 1]);
    out[node] = Rational(1, 2) * (pair_root(img, lambda) + Rational(1));
  }
  return out;
}

CosetTable coset_table_for(const EisensteinSpec& spec, const std::vector<int>& support, const ReductionOptions& opts) {
  if (opts.strategy == CosetStrategy::Exhaustive) return coset_reps_exhaustive(spec.rs, support, opts.exhaustive);
  if (!spec.inducing_node)
    throw ValidationError("levi-pruned enumeration needs a weight of the form 2s*Lambda_i - rho");
  return coset_reps_levi_pruned(spec.rs, spec.levi(), support);
}

ReductionResult reduce(const EisensteinSpec& spec, const CharacterSupport& support, const CosetTable& table,
                       unsigned threads) {
  const auto components = support_components(*spec.rs, support);
  if (table.support() != normalize_nodes(*spec.rs, support.nodes()))
    throw ValidationError("coset table was built for a different support");
  const std::size_t n = table.size();
  std::vector<TermOutcome> outcomes(n, TermOutcome{TermOutcome::NonGeneric, {}});
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) outcomes[i] = build_term(spec, support, components, table, i);
  };
  if (threads <= 1 || n < 1024) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
      std::size_t b = k * chunk, e = std::min(n, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  ReductionResult result;
  result.candidates = n;
  for (auto& o : outcomes) {
    switch (o.status) {
      case TermOutcome::Kept: result.expr.terms.push_back(std::move(o.term)); break;
      case TermOutcome::NonGeneric: ++result.dropped_nongeneric; break;
      case TermOutcome::Order: ++result.dropped_order; break;
    }
  }
  std::stable_sort(result.expr.terms.begin(), result.expr.terms.end(), term_less);
  return result;
}

CoeffExpr degenerate_whittaker(const EisensteinSpec& spec, const CharacterSupport& support,
                               const ReductionOptions& opts) {
  if (support.charges.empty()) throw ValidationError("character support is empty; use constant_term");
  support_components(*spec.rs, support);
  CosetTable table = coset_table_for(spec, support.nodes(), opts);
  return reduce(spec, support, table, opts.threads).expr;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Eulerian: return "Eulerian";
    case VerdictKind::Zero: return "Zero";
    case VerdictKind::NonEulerian: return "NonEulerian";
    case VerdictKind::Pole: return "Pole";
  }
  return "?";
}

std::string EulerianityVerdict::str() const {
  switch (kind) {
    case VerdictKind::Eulerian: return "Eulerian";
    case VerdictKind::Zero: return "Zero";
    case VerdictKind::NonEulerian: return "NonEulerian(" + std::to_string(surviving) + ")";
    case VerdictKind::Pole: return "Pole(" + (pole ? pole->describe() : std::string()) + ")";
  }
  return "?";
}

EulerianityVerdict eulerianity_report(const CoeffExpr& c, const std::optional<Rational>& s0) {
  EulerianityVerdict v;
  std::vector<TermGroup> groups;
  if (s0) {
    auto outcome = evaluate_symbolic(c, *s0);
    if (auto* pole = std::get_if<PoleReport>(&outcome)) {
      v.kind = VerdictKind::Pole;
      v.pole = *pole;
      return v;
    }
    const auto& survivors = std::get<CoeffExpr>(outcome);
    groups = merge_at(survivors, *s0);
    v.merged = survivors.terms.size() - groups.size();
  } else {
    for (const auto& t : c.terms)
      if (t.generic_order() <= 0) groups.push_back(TermGroup{t, Rational(1), 1});
  }
  v.surviving = groups.size();
  if (v.surviving == 0) {
    v.kind = VerdictKind::Zero;
  } else if (v.surviving == 1) {
    v.kind = VerdictKind::Eulerian;
    v.term = groups.front().lead;
    v.weight = groups.front().weight;
  } else {
    v.kind = VerdictKind::NonEulerian;
  }
  return v;
}

CoeffExpr constant_term(const EisensteinSpec& spec, const ReductionOptions& opts) {
  if (!spec.inducing_node) throw ValidationError("constant_term needs an inducing node");
  ReductionOptions o = opts;
  CosetTable table = o.strategy == CosetStrategy::Exhaustive
                         ? coset_reps_exhaustive(spec.rs, {}, o.exhaustive)
                         : coset_reps_levi_pruned(spec.rs, spec.levi(), {});
  CoeffExpr out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    TermExpr t;
    t.coset_id = key_string(table.key(i));
    t.xi = raw_intertwiner(*spec.rs, table.rho_image(i), spec.lambda);
    if (t.generic_order() > 0) continue;
    t.xi = canonicalize(t.xi);
    out.terms.push_back(std::move(t));
  }
  std::stable_sort(out.terms.begin(), out.terms.end(), term_less);
  return out;
}

}  // namespace ew
