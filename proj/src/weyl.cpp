#include "ew/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "ew/errors.hpp"

namespace ew {
namespace {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// (s_i v)_j = v_j - v_i * C_ij, in place.
void reflect_weight(const IntMatrix& cartan, int i, std::vector<int>& v) {
  const int vi = v[i];
  if (vi == 0) return;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] -= vi * cartan[i][j];
}

// Left multiplication by s_i on the action matrix: rows transform like weights.
void left_reflect(const IntMatrix& cartan, int i, IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    const int vi = m[i][col];
    if (vi == 0) continue;
    for (std::size_t j = 0; j < n; ++j) m[j][col] -= vi * cartan[i][j];
  }
}

std::vector<int> mat_apply(const IntMatrix& m, const std::vector<int>& v) {
  std::vector<int> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// Reduced word for the element sending rho to v (v = w rho).
std::vector<int> reduced_word_from_rho_image(const IntMatrix& cartan, std::vector<int> v) {
  std::vector<int> word;
  while (true) {
    auto it = std::find_if(v.begin(), v.end(), [](int c) { return c < 0; });
    if (it == v.end()) break;
    const int i = static_cast<int>(it - v.begin());
    word.push_back(i + 1);
    reflect_weight(cartan, i, v);
  }
  return word;
}

std::uint64_t pack(std::span<const int> v) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(v[i]))) << (8 * i);
  return key;
}

void check_int8(std::span<const int> v) {
  for (int c : v)
    if (c < -128 || c > 127) throw std::overflow_error("weight coordinate does not fit the packed coset key");
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  w.action_ = identity_matrix(rs.rank());
  return w;
}

WeylElement WeylElement::simple(const RootSystem& rs, int node) {
  rs.check_node(node);
  WeylElement w = identity(rs);
  left_reflect(rs.cartan_matrix(), node - 1, w.action_);
  w.word_ = {node};
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  IntMatrix m = identity_matrix(rs.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    rs.check_node(*it);
    left_reflect(rs.cartan_matrix(), *it - 1, m);
  }
  return from_matrix(rs, std::move(m));
}

WeylElement WeylElement::from_matrix(const RootSystem& rs, IntMatrix action) {
  const int n = rs.rank();
  if (static_cast<int>(action.size()) != n) throw ValidationError("Weyl action has wrong size");
  WeylElement w;
  w.word_ = reduced_word_from_rho_image(rs.cartan_matrix(), mat_apply(action, std::vector<int>(n, 1)));
  // Rebuild from the word so that a non-group matrix cannot slip through.
  IntMatrix check = identity_matrix(n);
  for (auto it = w.word_.rbegin(); it != w.word_.rend(); ++it) left_reflect(rs.cartan_matrix(), *it - 1, check);
  if (check != action) throw ValidationError("matrix is not a Weyl group element");
  w.action_ = std::move(action);
  return w;
}

std::string WeylElement::word_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(word_[i]);
  }
  return s;
}

WeightVector WeylElement::act(const WeightVector& v) const {
  WeightVector out{std::vector<Rational>(action_.size(), Rational(0))};
  for (std::size_t i = 0; i < action_.size(); ++i)
    for (std::size_t j = 0; j < v.coords.size(); ++j)
      if (action_[i][j] != 0) out.coords[i] += Rational(action_[i][j]) * v.coords[j];
  return out;
}

AffineWeight WeylElement::act(const AffineWeight& v) const {
  AffineWeight out;
  out.coords.assign(action_.size(), AffineArg::constant(Rational(0)));
  for (std::size_t i = 0; i < action_.size(); ++i)
    for (std::size_t j = 0; j < v.coords.size(); ++j)
      if (action_[i][j] != 0) out.coords[i] = out.coords[i] + Rational(action_[i][j]) * v.coords[j];
  return out;
}

std::vector<int> WeylElement::act(const std::vector<int>& v) const { return mat_apply(action_, v); }

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return WeylElement::from_matrix(rs, multiply(a.action(), b.action()));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> rev(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(rs, rev);
}

RootVec act_on_root(const RootSystem& rs, const WeylElement& w, const RootVec& r) {
  RootVec out = r;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) out = rs.reflect(*it, out);
  return out;
}

WeylElement longest_element(const RootSystem& rs) {
  return WeylElement::from_word(rs, reduced_word_from_rho_image(rs.cartan_matrix(), std::vector<int>(rs.rank(), -1)));
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& nodes) {
  // Make rho anti-dominant on the subset, touching only reflections in it.
  const auto& c = rs.cartan_matrix();
  std::vector<int> v(rs.rank(), 1);
  std::vector<int> word;
  while (true) {
    int pick = -1;
    for (int j : nodes)
      if (v[j - 1] > 0) {
        pick = j;
        break;
      }
    if (pick < 0) break;
    rs.check_node(pick);
    word.push_back(pick);
    reflect_weight(c, pick - 1, v);
  }
  // The word was built by successive left multiplication; reverse it.
  std::reverse(word.begin(), word.end());
  return WeylElement::from_word(rs, word);
}

std::vector<RootVec> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<RootVec> out;
  for (const auto& a : rs.positive_roots()) {
    RootVec img = act_on_root(rs, w, a);
    if (!rs.is_positive(img)) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<int>> weyl_orbit(const RootSystem& rs, const std::vector<int>& dominant) {
  if (static_cast<int>(dominant.size()) != rs.rank()) throw ValidationError("weight has wrong length");
  for (int c : dominant)
    if (c < 0) throw ValidationError("weyl_orbit needs a dominant weight");
  check_int8(dominant);
  std::vector<std::vector<int>> orbit{dominant};
  std::unordered_map<std::uint64_t, std::size_t> seen{{pack(dominant), 0}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (orbit[head][i] <= 0) continue;
      std::vector<int> next = orbit[head];
      reflect_weight(rs.cartan_matrix(), i, next);
      if (seen.emplace(pack(next), orbit.size()).second) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

std::uint64_t parabolic_order(const RootSystem& rs, const std::vector<int>& nodes) {
  // |W_J| = |W| / |orbit of sum_{j not in J} Lambda_j|.
  std::vector<int> nu = coset_base_weight(rs, nodes);
  return rs.weyl_group_order() / weyl_orbit(rs, nu).size();
}

std::string to_string(CosetStrategy s) { return s == CosetStrategy::Exhaustive ? "exhaustive" : "levi-pruned"; }

CosetStrategy parse_strategy(std::string_view text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "exhaustive") return CosetStrategy::Exhaustive;
  if (t == "levi-pruned" || t == "levipruned" || t == "levi_pruned" || t == "pruned") return CosetStrategy::LeviPruned;
  throw ValidationError("unknown strategy '" + std::string(text) + "' (exhaustive | levi-pruned)");
}

CosetTable::CosetTable(RootSystemPtr parent, std::vector<int> support, CosetStrategy strategy, std::vector<int> levi)
    : parent_(std::move(parent)), support_(std::move(support)), strategy_(strategy), levi_(std::move(levi)) {}

std::span<const std::uint8_t> CosetTable::word(std::size_t i) const {
  return {letters_.data() + offsets_.at(i), lengths_.at(i)};
}

std::vector<int> CosetTable::word_vector(std::size_t i) const {
  auto w = word(i);
  return {w.begin(), w.end()};
}

WeylElement CosetTable::element(std::size_t i) const {
  auto w = word_vector(i);
  return WeylElement::from_word(*parent_, w);
}

std::vector<int> CosetTable::key(std::size_t i) const {
  const std::size_t n = static_cast<std::size_t>(parent_->rank());
  return {keys_.begin() + static_cast<std::ptrdiff_t>(i * n), keys_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)};
}

std::vector<int> CosetTable::rho_image(std::size_t i) const {
  const std::size_t n = static_cast<std::size_t>(parent_->rank());
  return {rho_images_.begin() + static_cast<std::ptrdiff_t>(i * n),
          rho_images_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)};
}

void CosetTable::add(std::span<const std::uint8_t> word, std::span<const int> key, std::span<const int> rho_image) {
  check_int8(key);
  check_int8(rho_image);
  offsets_.push_back(static_cast<std::uint32_t>(letters_.size()));
  lengths_.push_back(static_cast<std::uint32_t>(word.size()));
  letters_.insert(letters_.end(), word.begin(), word.end());
  for (int c : key) keys_.push_back(static_cast<std::int8_t>(c));
  for (int c : rho_image) rho_images_.push_back(static_cast<std::int8_t>(c));
}

void CosetTable::sort() {
  const std::size_t n = static_cast<std::size_t>(parent_->rank());
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto key_at = [&](std::size_t i) { return keys_.begin() + static_cast<std::ptrdiff_t>(i * n); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lengths_[a] != lengths_[b]) return lengths_[a] < lengths_[b];
    return std::lexicographical_compare(key_at(b), key_at(b) + static_cast<std::ptrdiff_t>(n), key_at(a),
                                        key_at(a) + static_cast<std::ptrdiff_t>(n));
  });
  CosetTable sorted(parent_, support_, strategy_, levi_);
  sorted.letters_.reserve(letters_.size());
  for (std::size_t i : order) {
    std::vector<int> k = key(i), r = rho_image(i);
    sorted.add(word(i), k, r);
  }
  letters_ = std::move(sorted.letters_);
  offsets_ = std::move(sorted.offsets_);
  lengths_ = std::move(sorted.lengths_);
  keys_ = std::move(sorted.keys_);
  rho_images_ = std::move(sorted.rho_images_);
}

std::vector<int> coset_base_weight(const RootSystem& rs, const std::vector<int>& support) {
  std::vector<int> nu(rs.rank(), 1);
  for (int j : support) {
    rs.check_node(j);
    nu[j - 1] = 0;
  }
  return nu;
}

std::vector<int> normalize_nodes(const RootSystem& rs, std::vector<int> nodes) {
  for (int j : nodes) rs.check_node(j);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

int inducing_node_of(const RootSystem& rs, const std::vector<int>& levi) {
  auto nodes = normalize_nodes(rs, levi);
  if (static_cast<int>(nodes.size()) != rs.rank() - 1)
    throw ValidationError("Levi must contain all simple roots but one (maximal parabolic)");
  for (int i = 1; i <= rs.rank(); ++i)
    if (!std::binary_search(nodes.begin(), nodes.end(), i)) return i;
  throw ValidationError("Levi is not maximal");
}

CosetTable coset_reps_exhaustive(const RootSystemPtr& rs_ptr, const std::vector<int>& support_in,
                                 const ExhaustiveOptions& opts) {
  const RootSystem& rs = *rs_ptr;
  if (rs.weyl_group_order() > opts.max_group_order)
    throw InfeasibleStrategy("exhaustive enumeration of W(" + rs.type().name() + ") with |W| = " +
                             std::to_string(rs.weyl_group_order()) + " exceeds the cap of " +
                             std::to_string(opts.max_group_order) + "; use the levi-pruned strategy");
  const auto support = normalize_nodes(rs, support_in);
  const int n = rs.rank();
  const auto& c = rs.cartan_matrix();

  // BFS over the orbit of nu; each step w -> s_i w lengthens w while keeping it
  // minimal in w W', because the step is taken only when <w nu | alpha_i> > 0.
  struct Node {
    std::uint64_t key;
    std::uint64_t rho;
    std::uint32_t parent;
    std::uint8_t letter;
  };
  auto unpack = [n](std::uint64_t packed) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<std::int8_t>(static_cast<std::uint8_t>(packed >> (8 * i)));
    return v;
  };
  std::vector<int> nu = coset_base_weight(rs, support);
  std::vector<int> rho(n, 1);
  std::vector<Node> nodes{{pack(nu), pack(rho), 0, 0}};
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  seen.reserve(rs.weyl_group_order() / parabolic_order(rs, support) + 1);
  seen.emplace(nodes[0].key, 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const std::vector<int> v = unpack(nodes[head].key);
    for (int i = 0; i < n; ++i) {
      if (v[i] <= 0) continue;
      std::vector<int> next = v;
      reflect_weight(c, i, next);
      const std::uint64_t k = pack(next);
      if (seen.count(k)) continue;
      std::vector<int> r = unpack(nodes[head].rho);
      reflect_weight(c, i, r);
      seen.emplace(k, static_cast<std::uint32_t>(nodes.size()));
      nodes.push_back({k, pack(r), static_cast<std::uint32_t>(head), static_cast<std::uint8_t>(i + 1)});
    }
  }

  CosetTable table(rs_ptr, support, CosetStrategy::Exhaustive, {});
  std::vector<std::uint8_t> word;
  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    word.clear();
    for (std::size_t cur = idx; cur != 0; cur = nodes[cur].parent) word.push_back(nodes[cur].letter);
    table.add(word, unpack(nodes[idx].key), unpack(nodes[idx].rho));
  }
  table.sort();
  return table;
}

CosetTable coset_reps_levi_pruned(const RootSystemPtr& rs_ptr, const std::vector<int>& levi_in,
                                  const std::vector<int>& support_in) {
  const RootSystem& rs = *rs_ptr;
  const auto levi = normalize_nodes(rs, levi_in);
  const auto support = normalize_nodes(rs, support_in);
  const int istar = inducing_node_of(rs, levi);
  const int n = rs.rank();
  const auto& c = rs.cartan_matrix();

  // Orbit of Lambda_{i*}; x = w^{-1} with x Lambda = mu, word of x recorded
  // leftmost-last so that reversing gives a reduced word for w.
  std::vector<int> lambda(n, 0);
  lambda[istar - 1] = 1;
  struct Node {
    std::vector<int> mu;
    std::vector<int> x_word;  // x = s_{x_word[0]} s_{x_word[1]} ...
  };
  std::vector<Node> orbit{{lambda, {}}};
  std::unordered_map<std::uint64_t, std::size_t> index{{pack(lambda), 0}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      if (orbit[head].mu[i] <= 0) continue;
      std::vector<int> next = orbit[head].mu;
      reflect_weight(c, i, next);
      if (index.count(pack(next))) continue;
      std::vector<int> xw{i + 1};
      xw.insert(xw.end(), orbit[head].x_word.begin(), orbit[head].x_word.end());
      index.emplace(pack(next), orbit.size());
      orbit.push_back({std::move(next), std::move(xw)});
    }
  }

  // One representative per right W'-coset of x: the W'-dominant member of mu's W'-orbit.
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    std::vector<int> mu = orbit[k].mu;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j : support)
        if (mu[j - 1] < 0) {
          reflect_weight(c, j - 1, mu);
          moved = true;
        }
    }
    chosen.push_back(index.at(pack(mu)));
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  CosetTable table(rs_ptr, support, CosetStrategy::LeviPruned, levi);
  const std::vector<int> nu = coset_base_weight(rs, support);
  const std::vector<int> rho(n, 1);
  for (std::size_t k : chosen) {
    std::vector<int> w_word(orbit[k].x_word.rbegin(), orbit[k].x_word.rend());
    WeylElement w = WeylElement::from_word(rs, w_word);
    std::vector<std::uint8_t> letters(w.word().begin(), w.word().end());
    table.add(letters, w.act(nu), w.act(rho));
  }
  table.sort();
  return table;
}

}  // namespace ew
