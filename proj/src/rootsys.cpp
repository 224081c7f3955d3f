#include "ew/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "ew/errors.hpp"

namespace ew {
namespace {

IntMatrix cartan_for(Series series, int n) {
  IntMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) {  // 1-based labels
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  };
  switch (series) {
    case Series::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Series::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Series::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
  }
  return c;
}

std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col].is_zero()) ++piv;
    std::swap(a[piv], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::string CartanType::name() const {
  const char* letter = series == Series::A ? "A" : series == Series::D ? "D" : "E";
  return letter + std::to_string(rank);
}

CartanType CartanType::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != '_' && ch != ' ') s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (s.size() < 2) throw ValidationError("unrecognized group '" + std::string(text) + "'");
  CartanType t;
  switch (s[0]) {
    case 'A': t.series = Series::A; break;
    case 'D': t.series = Series::D; break;
    case 'E': t.series = Series::E; break;
    default: throw ValidationError("unsupported series in '" + std::string(text) + "' (A, D, E only)");
  }
  try {
    std::size_t used = 0;
    t.rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ValidationError("bad rank in '" + std::string(text) + "'");
  }
  return t;
}

RootSystem RootSystem::build(Series series, int rank) {
  bool ok = (series == Series::A && rank >= 1) || (series == Series::D && rank >= 4) ||
            (series == Series::E && rank >= 6 && rank <= 8);
  if (!ok)
    throw ValidationError("unsupported root system " + CartanType{series, rank}.name() +
                          " (need A_n n>=1, D_n n>=4, E6, E7, E8)");
  RootSystem rs;
  rs.type_ = {series, rank};
  rs.cartan_ = cartan_for(series, rank);
  rs.inverse_cartan_ = invert(rs.cartan_);

  for (int i = 0; i < rank; ++i) {
    RootVec r(rank, 0);
    r[i] = 1;
    rs.simple_.push_back(r);
  }

  // Close the simple roots under simple reflections; keep the positive half.
  std::set<RootVec> all(rs.simple_.begin(), rs.simple_.end());
  std::deque<RootVec> queue(rs.simple_.begin(), rs.simple_.end());
  while (!queue.empty()) {
    RootVec r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      RootVec t = rs.reflect(i, r);
      if (all.insert(t).second) queue.push_back(t);
    }
  }
  for (const auto& r : all)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) rs.positive_.push_back(r);
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (std::size_t i = 0; i < rs.positive_.size(); ++i) rs.positive_lookup_[rs.positive_[i]] = static_cast<int>(i);

  rs.fundamental_ = rs.inverse_cartan_;
  rs.rho_root_basis_.assign(rank, Rational(0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.rho_root_basis_[j] += rs.inverse_cartan_[i][j];
  return rs;
}

WeightVector RootSystem::weyl_vector() const { return {std::vector<Rational>(rank(), Rational(1))}; }

int RootSystem::positive_index(const RootVec& r) const {
  auto it = positive_lookup_.find(r);
  return it == positive_lookup_.end() ? -1 : it->second;
}

bool RootSystem::is_positive(const RootVec& r) const { return positive_index(r) >= 0; }

bool RootSystem::is_root(const RootVec& r) const {
  if (is_positive(r)) return true;
  RootVec neg(r.size());
  std::transform(r.begin(), r.end(), neg.begin(), [](int c) { return -c; });
  return is_positive(neg);
}

int RootSystem::height(const RootVec& r) const {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

std::vector<int> RootSystem::root_to_weight(const RootVec& r) const {
  const int n = rank();
  if (static_cast<int>(r.size()) != n) throw ValidationError("root has wrong length");
  std::vector<int> w(n, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) w[j] += r[k] * cartan_[k][j];
  return w;
}

std::vector<Rational> RootSystem::weight_to_root_basis(const WeightVector& w) const {
  const int n = rank();
  if (static_cast<int>(w.coords.size()) != n) throw ValidationError("weight has wrong length");
  std::vector<Rational> out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[j] += w.coords[i] * inverse_cartan_[i][j];
  return out;
}

RootVec RootSystem::reflect(int node, const RootVec& r) const {
  const int i = node - 1;
  int p = 0;
  for (int k = 0; k < rank(); ++k) p += r[k] * cartan_[k][i];
  RootVec out = r;
  out[i] -= p;
  return out;
}

std::uint64_t RootSystem::weyl_group_order() const {
  const int n = rank();
  switch (series()) {
    case Series::A: return factorial(n + 1);
    case Series::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Series::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
  }
  return 0;
}

std::vector<int> RootSystem::neighbours(int node) const {
  check_node(node);
  std::vector<int> out;
  for (int j = 0; j < rank(); ++j)
    if (cartan_[node - 1][j] == -1) out.push_back(j + 1);
  return out;
}

void RootSystem::check_node(int node) const {
  if (node < 1 || node > rank())
    throw ValidationError("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank()) +
                          " for " + type_.name());
}

RootSystemPtr make_root_system(Series series, int rank) {
  return std::make_shared<const RootSystem>(RootSystem::build(series, rank));
}

RootSystemPtr make_root_system(const CartanType& type) { return make_root_system(type.series, type.rank); }

int pairing(const RootSystem& rs, const RootVec& a, const RootVec& b) {
  const auto n = static_cast<std::size_t>(rs.rank());
  if (a.size() != n || b.size() != n) throw ValidationError("pairing: dimension mismatch");
  int p = 0;
  const auto& c = rs.cartan_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) p += a[i] * c[i][j] * b[j];
  }
  return p;
}

Rational pairing(const RootSystem& rs, const RootVec& root, const WeightVector& w) {
  const auto n = static_cast<std::size_t>(rs.rank());
  if (root.size() != n || w.coords.size() != n) throw ValidationError("pairing: dimension mismatch");
  Rational p(0);
  for (std::size_t i = 0; i < n; ++i)
    if (root[i] != 0) p += Rational(root[i]) * w.coords[i];
  return p;
}

Rational pairing(const RootSystem& rs, const WeightVector& v, const WeightVector& w) {
  if (v.coords.size() != static_cast<std::size_t>(rs.rank())) throw ValidationError("pairing: dimension mismatch");
  auto v_root = rs.weight_to_root_basis(v);
  if (w.coords.size() != v_root.size()) throw ValidationError("pairing: dimension mismatch");
  Rational p(0);
  for (std::size_t i = 0; i < v_root.size(); ++i) p += v_root[i] * w.coords[i];
  return p;
}

AffineArg pairing(const RootSystem& rs, const RootVec& root, const AffineWeight& w) {
  const auto n = static_cast<std::size_t>(rs.rank());
  if (root.size() != n || w.coords.size() != n) throw ValidationError("pairing: dimension mismatch");
  AffineArg p{Rational(0), Rational(0)};
  for (std::size_t i = 0; i < n; ++i)
    if (root[i] != 0) p = p + Rational(root[i]) * w.coords[i];
  return p;
}

WeightVector fundamental_weight(const RootSystem& rs, int node) {
  rs.check_node(node);
  WeightVector w{std::vector<Rational>(rs.rank(), Rational(0))};
  w.coords[node - 1] = Rational(1);
  return w;
}

AffineWeight eisenstein_weight(const RootSystem& rs, int node) {
  rs.check_node(node);
  AffineWeight w;
  w.coords.assign(rs.rank(), AffineArg::constant(Rational(-1)));
  w.coords[node - 1] = AffineArg{Rational(2), Rational(-1)};
  return w;
}

}  // namespace ew
