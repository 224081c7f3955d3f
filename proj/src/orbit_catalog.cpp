#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "ew/errors.hpp"
#include "ew/orbits.hpp"

namespace ew {

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != '(' && c != ')') s += c;
  Partition p;
  const bool separated = s.find_first_of(", ") != std::string::npos || s.find('^') != std::string::npos;
  auto bad = [&] { return ValidationError("cannot parse partition '" + std::string(text) + "'"); };
  if (!separated) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') throw bad();
      p.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ',' || s[i] == ' ')) ++i;
      if (i == s.size()) break;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw bad();
      const int part = std::stoi(s.substr(i, j - i));
      int mult = 1;
      if (j < s.size() && s[j] == '^') {
        std::size_t k = ++j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw bad();
        mult = std::stoi(s.substr(j, k - j));
        j = k;
      }
      if (part <= 0 || mult <= 0) throw bad();
      p.insert(p.end(), mult, part);
      i = j;
    }
  }
  if (p.empty()) throw bad();
  std::sort(p.rbegin(), p.rend());
  return p;
}

std::string partition_str(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (i) s += ",";
    s += std::to_string(p[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + "]";
}

Partition dual_partition(const Partition& p) {
  Partition d;
  if (p.empty()) return d;
  for (int k = 1; k <= p.front(); ++k)
    d.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [k](int x) { return x >= k; })));
  return d;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0)) return false;
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool is_orthogonal_partition(const Partition& p) {
  for (int k : p)
    if (k % 2 == 0 && std::count(p.begin(), p.end(), k) % 2 != 0) return false;
  return true;
}

bool is_very_even(const Partition& p) {
  return !p.empty() && is_orthogonal_partition(p) && std::all_of(p.begin(), p.end(), [](int k) { return k % 2 == 0; });
}

namespace {

int sum_squares(const Partition& p) {
  int s = 0;
  for (int x : p) s += x * x;
  return s;
}

std::string type_a_bala_carter(const Partition& p) {
  std::map<int, int, std::greater<>> count;
  for (int k : p)
    if (k > 1) ++count[k - 1];
  if (count.empty()) return "0";
  std::string s;
  for (const auto& [rank, m] : count) {
    if (!s.empty()) s += "+";
    s += (m > 1 ? std::to_string(m) : "") + "A" + std::to_string(rank);
  }
  return s;
}

// Consecutive node blocks of lengths part-1, separated by one unused node.
std::vector<int> type_a_representative(const Partition& p) {
  std::vector<int> nodes;
  int next = 1;
  for (int k : p) {
    for (int i = 0; i < k - 1; ++i) nodes.push_back(next++);
    ++next;
  }
  return nodes;
}

void set_covers(std::vector<NilpotentOrbit>& cat) {
  const auto closure = closure_order(cat);
  for (std::size_t j = 0; j < cat.size(); ++j) {
    cat[j].covers.clear();
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (i == j || !closure[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < cat.size() && direct; ++k)
        if (k != i && k != j && closure[i][k] && closure[k][j]) direct = false;
      if (direct) cat[j].covers.push_back(i);
    }
  }
}

void sort_catalog(std::vector<NilpotentOrbit>& cat) {
  std::stable_sort(cat.begin(), cat.end(), [](const NilpotentOrbit& a, const NilpotentOrbit& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.label < b.label;
  });
}

std::vector<NilpotentOrbit> catalog_a(const CartanType& t) {
  const int N = t.rank + 1;
  std::vector<NilpotentOrbit> cat;
  for (const auto& p : partitions_of(N)) {
    NilpotentOrbit o;
    o.type = t;
    o.partition = p;
    o.label = partition_str(p);
    o.dim = N * N - sum_squares(dual_partition(p));
    o.bala_carter = type_a_bala_carter(p);
    o.zero = p.front() == 1;
    o.minimal = p.front() == 2 && (p.size() < 2 || p[1] == 1);
    o.next_to_minimal = p.size() >= 2 && p[0] == 2 && p[1] == 2 && (p.size() < 3 || p[2] == 1);
    o.representative_nodes = type_a_representative(p);
    cat.push_back(std::move(o));
  }
  sort_catalog(cat);
  set_covers(cat);
  return cat;
}

// kA1 representatives in D_n: alpha_1, alpha_3, ..., with the last root
// moved to a spinor node for the very-even case 2^n.
std::vector<int> type_d_two_representative(int n, int k, int cls) {
  std::vector<int> nodes;
  for (int i = 0; i < k; ++i) nodes.push_back(2 * i + 1);
  if (nodes.back() <= n - 2) return nodes;
  if (nodes.back() == n - 1 && cls != 0) {
    nodes.back() = cls == 1 ? n - 1 : n;
    return nodes;
  }
  return {};
}

std::vector<NilpotentOrbit> catalog_d(const CartanType& t) {
  const int n = t.rank, N = 2 * n;
  std::vector<NilpotentOrbit> cat;
  for (const auto& p : partitions_of(N)) {
    if (!is_orthogonal_partition(p)) continue;
    const int odd = static_cast<int>(std::count_if(p.begin(), p.end(), [](int k) { return k % 2 == 1; }));
    const int dim = n * (2 * n - 1) - (sum_squares(dual_partition(p)) - odd) / 2;
    const bool very_even = is_very_even(p);
    for (int cls : very_even ? std::vector<int>{1, 2} : std::vector<int>{0}) {
      NilpotentOrbit o;
      o.type = t;
      o.partition = p;
      o.very_even_class = cls;
      o.label = partition_str(p) + (cls == 1 ? "_I" : cls == 2 ? "_II" : "");
      o.dim = dim;
      const int twos = static_cast<int>(std::count(p.begin(), p.end(), 2));
      const bool only_twos_and_ones = p.front() <= 2;
      o.zero = p.front() == 1;
      if (o.zero) o.bala_carter = "0";
      if (only_twos_and_ones && twos == 2) {
        o.minimal = true;
        o.bala_carter = "A1";
      }
      if (only_twos_and_ones && twos == 4) {
        o.next_to_minimal = true;
        o.bala_carter = "(2A1)''";
      }
      if (p.front() == 3 && (p.size() == 1 || p[1] == 1)) {
        o.next_to_minimal = true;
        o.bala_carter = "(2A1)'";
        o.representative_nodes = {n - 1, n};
      }
      if (only_twos_and_ones && twos > 0) o.representative_nodes = type_d_two_representative(n, twos / 2, cls);
      cat.push_back(std::move(o));
    }
  }
  sort_catalog(cat);
  set_covers(cat);
  return cat;
}

struct ERow {
  const char* label;
  int dim;
  std::vector<int> nodes;
};

std::vector<NilpotentOrbit> catalog_e(const CartanType& t) {
  // Orbits up to just above next-to-minimal; each row's closure contains the
  // previous rows (a chain in this range). For E8, A2 lies over 3A1.
  std::vector<ERow> rows;
  switch (t.rank) {
    case 6:
      rows = {{"0", 0, {}}, {"A1", 22, {1}}, {"2A1", 32, {1, 4}}, {"3A1", 40, {1, 4, 6}}, {"A2", 42, {1, 3}}};
      break;
    case 7:
      rows = {{"0", 0, {}},
              {"A1", 34, {1}},
              {"2A1", 52, {1, 4}},
              {"(3A1)''", 54, {2, 5, 7}},
              {"(3A1)'", 64, {1, 4, 6}},
              {"A2", 66, {1, 3}}};
      break;
    case 8:
      rows = {{"0", 0, {}},          {"A1", 58, {1}},     {"2A1", 92, {1, 4}},
              {"3A1", 112, {1, 4, 6}}, {"A2", 114, {1, 3}}, {"4A1", 128, {2, 3, 5, 7}}};
      break;
    default:
      throw ValidationError("no orbit table for " + t.name());
  }
  std::vector<NilpotentOrbit> cat;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    NilpotentOrbit o;
    o.type = t;
    o.label = rows[i].label;
    o.bala_carter = rows[i].label;
    o.dim = rows[i].dim;
    o.zero = i == 0;
    o.minimal = o.label == "A1";
    o.next_to_minimal = o.label == "2A1";
    o.representative_nodes = rows[i].nodes;
    if (i > 0) o.covers = {i - 1};
    cat.push_back(std::move(o));
  }
  return cat;
}

// Very-even orbits of different classes: O_a^I lies in the closure of
// O_b^II only through an intermediate non-very-even partition.
bool d_closure(const NilpotentOrbit& a, const NilpotentOrbit& b, const std::vector<NilpotentOrbit>& cat) {
  if (!dominance_leq(a.partition, b.partition)) return false;
  if (a.very_even_class == 0 || b.very_even_class == 0 || a.very_even_class == b.very_even_class) return true;
  if (a.partition == b.partition) return false;
  for (const auto& c : cat)
    if (c.very_even_class == 0 && c.partition != a.partition && c.partition != b.partition &&
        dominance_leq(a.partition, c.partition) && dominance_leq(c.partition, b.partition))
      return true;
  return false;
}

}  // namespace

std::vector<NilpotentOrbit> orbit_catalog(const CartanType& type) {
  switch (type.series) {
    case Series::A:
      if (type.rank < 1) break;
      return catalog_a(type);
    case Series::D:
      if (type.rank < 4) break;
      return catalog_d(type);
    case Series::E:
      return catalog_e(type);
  }
  throw ValidationError("unsupported type " + type.name());
}

std::vector<std::vector<bool>> closure_order(const std::vector<NilpotentOrbit>& cat) {
  const std::size_t n = cat.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  if (n == 0) return c;
  if (cat.front().type.series == Series::E) {
    // rows form a chain by construction
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) c[i][j] = true;
    return c;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i][j] = cat[i].type.series == Series::A ? dominance_leq(cat[i].partition, cat[j].partition)
                                                 : d_closure(cat[i], cat[j], cat);
  return c;
}

const NilpotentOrbit& find_orbit(const std::vector<NilpotentOrbit>& cat, std::string_view key) {
  for (const auto& o : cat)
    if (o.label == key) return o;
  const NilpotentOrbit* hit = nullptr;
  int hits = 0;
  for (const auto& o : cat)
    if (!o.bala_carter.empty() && o.bala_carter == key) {
      hit = &o;
      ++hits;
    }
  if (hits == 1) return *hit;
  if (hits > 1) throw ValidationError("orbit '" + std::string(key) + "' is ambiguous; give the partition with _I or _II");
  std::string_view k = key;
  int cls = 0;
  if (k.ends_with("_II")) {
    cls = 2;
    k.remove_suffix(3);
  } else if (k.ends_with("_I")) {
    cls = 1;
    k.remove_suffix(2);
  }
  Partition p;
  try {
    p = parse_partition(k);
  } catch (const ValidationError&) {
    throw ValidationError("no orbit '" + std::string(key) + "' in the catalog");
  }
  hits = 0;
  for (const auto& o : cat)
    if (o.partition == p && (cls == 0 || o.very_even_class == cls)) {
      hit = &o;
      ++hits;
    }
  if (hits == 1) return *hit;
  if (hits > 1) throw ValidationError("very-even partition " + partition_str(p) + " needs _I or _II");
  throw ValidationError("no orbit with partition " + partition_str(p) + " in the catalog of " + cat.front().type.name());
}

}  // namespace ew
