#include <algorithm>
#include <set>
#include <tuple>

#include "ew/cli.hpp"
#include "ew/errors.hpp"

namespace ew::cli {
namespace {

constexpr VerdictKind kEul = VerdictKind::Eulerian;
constexpr VerdictKind kZero = VerdictKind::Zero;

std::string sl_label(int n) { return "SL_" + std::to_string(n); }
std::string so_label(int n) { return "SO_{" + std::to_string(n) + "," + std::to_string(n) + "}"; }

std::string nodes_str(const std::vector<int>& nodes) {
  std::string s;
  for (int k : nodes) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

// The D_n diagram automorphism exchanging the spinor nodes.
std::string swap_spinors(const std::string& support, int n) {
  std::vector<int> nodes;
  for (int k : CharacterSupport::parse(support).nodes()) nodes.push_back(k == n ? n - 1 : k == n - 1 ? n : k);
  std::sort(nodes.begin(), nodes.end());
  return nodes_str(nodes);
}

void add_sl_rows(std::vector<RealizationRow>& rows) {
  for (int n = 3; n <= 7; ++n) {
    const CartanType t{Series::A, n - 1};
    for (int node : {1, n - 1}) {
      RealizationRow r{t, sl_label(n), "min", node, std::nullopt, {{"A1", std::to_string(node), kEul}}};
      if (n >= 4) r.probes.push_back({"2A1", "1,3", kZero});
      rows.push_back(r);
    }
    if (n < 4) continue;  // SL_3 has no 2A1 orbit
    for (int node : std::set<int>{2, n - 2}) {
      RealizationRow r{t, sl_label(n), "ntm", node, std::nullopt, {{"2A1", "1,3", kEul}, {"A2", "1,2", kZero}}};
      if (n >= 6) r.probes.push_back({"3A1", "1,3,5", kZero});
      rows.push_back(r);
    }
  }
}

void add_so_rows(std::vector<RealizationRow>& rows) {
  for (int n = 4; n <= 7; ++n) {
    const CartanType t{Series::D, n};
    const std::string spin = std::to_string(n - 1) + "," + std::to_string(n);
    auto min_row = [&](int node, Rational s) {
      RealizationRow r{t, so_label(n), "min", node, s, {{"A1", "1", kEul}, {"(2A1)'", spin, kZero}}};
      r.probes.push_back({"(2A1)''", node == n - 1 ? swap_spinors("1,3", n) : "1,3", kZero});
      return r;
    };
    rows.push_back(min_row(1, Rational(n - 2, 2)));
    rows.push_back(min_row(n, Rational(1)));
    rows.push_back(min_row(n - 1, Rational(1)));
    rows.push_back({t, so_label(n), "ntm (2A1)'", 1, std::nullopt,
                    {{"(2A1)'", spin, kEul}, {"(2A1)''", "1,3", kZero}, {"A2", "1,2", kZero}}});
    for (int node : {n, n - 1}) {
      auto mirror = [&](const std::string& s) { return node == n ? s : swap_spinors(s, n); };
      RealizationRow r{t, so_label(n), "ntm (2A1)''", node, Rational(2),
                       {{"(2A1)''", mirror("1,3"), kEul},
                        {"3A1", mirror("1,3," + std::to_string(n)), kZero},
                        {"A2", "1,2", kZero}}};
      if (n >= 6) r.probes.push_back({"3A1", "1,3,5", kZero});
      rows.push_back(r);
    }
  }
}

void add_e_rows(std::vector<RealizationRow>& rows) {
  const CartanType e6{Series::E, 6}, e7{Series::E, 7}, e8{Series::E, 8};
  rows.push_back({e6, "E6", "min", 1, Rational(3, 2), {{"A1", "1", kEul}, {"2A1", "1,4", kZero}}});
  rows.push_back({e6, "E6", "min", 6, Rational(3, 2), {{"A1", "6", kEul}, {"2A1", "1,4", kZero}}});
  const std::vector<Probe> e6_ntm{{"2A1", "1,4", kEul}, {"3A1", "1,4,6", kZero}, {"A2", "1,3", kZero}};
  rows.push_back({e6, "E6", "ntm", 1, std::nullopt, e6_ntm});
  rows.push_back({e6, "E6", "ntm", 6, std::nullopt, e6_ntm});
  rows.push_back({e6, "E6", "ntm", 5, Rational(1), e6_ntm});

  rows.push_back({e7, "E7", "min", 1, Rational(3, 2), {{"A1", "1", kEul}, {"2A1", "1,4", kZero}}});
  rows.push_back({e7, "E7", "min", 7, Rational(2), {{"A1", "7", kEul}, {"2A1", "1,7", kZero}}});
  const std::vector<Probe> e7_zero{{"(3A1)''", "2,5,7", kZero}, {"(3A1)'", "1,4,6", kZero}, {"A2", "1,3", kZero}};
  for (auto [node, s, pair] : {std::tuple{1, Rational(5, 2), "1,4"}, std::tuple{6, Rational(3, 2), "1,7"},
                               std::tuple{7, Rational(4), "1,7"}}) {
    RealizationRow r{e7, "E7", "ntm", node, s, {{"2A1", pair, kEul}}};
    r.probes.insert(r.probes.end(), e7_zero.begin(), e7_zero.end());
    rows.push_back(r);
  }

  rows.push_back({e8, "E8", "min", 1, Rational(3, 2), {{"A1", "1", kEul}, {"2A1", "1,4", kZero}}});
  rows.push_back({e8, "E8", "min", 8, Rational(5, 2), {{"A1", "8", kEul}, {"2A1", "6,8", kZero}}});
  const std::vector<Probe> e8_zero{{"3A1", "4,6,8", kZero}, {"A2", "7,8", kZero}, {"4A1", "2,3,5,7", kZero}};
  for (auto [node, s, pair] : {std::tuple{1, Rational(5, 2), "1,4"}, std::tuple{7, Rational(2), "6,8"},
                               std::tuple{8, Rational(9, 2), "6,8"}}) {
    RealizationRow r{e8, "E8", "ntm", node, s, {{"2A1", pair, kEul}}};
    r.probes.insert(r.probes.end(), e8_zero.begin(), e8_zero.end());
    rows.push_back(r);
  }
}

}  // namespace

std::vector<RealizationRow> realization_rows() {
  std::vector<RealizationRow> rows;
  add_sl_rows(rows);
  add_so_rows(rows);
  add_e_rows(rows);
  return rows;
}

RowOutcome check_realization(const RealizationRow& row, const ReductionOptions& opts, const CosetCache* cache) {
  RowOutcome out{row, {}, true};
  const auto spec = EisensteinSpec::degenerate(make_root_system(row.type), row.node);
  for (const auto& probe : row.probes) {
    const auto support = CharacterSupport::parse(probe.support);
    const CoeffExpr c = cache ? reduce(spec, support, cache->get_or_compute(spec, support.nodes(), opts), opts.threads).expr
                              : degenerate_whittaker(spec, support, opts);
    ProbeOutcome p{probe, eulerianity_report(c, row.s), c.terms.size(), false};
    p.ok = p.verdict.kind == probe.expected;
    out.pass = out.pass && p.ok;
    out.probes.push_back(std::move(p));
  }
  return out;
}

std::vector<GkRow> gkdim_rows() {
  std::vector<GkRow> rows;
  auto add = [&](const std::string& label, const CartanType& t, const std::string& key, int expected) {
    const auto cat = orbit_catalog(t);
    const int got = find_orbit(cat, key).dim / 2;
    rows.push_back({label, t, key, expected, got, got == expected});
  };
  for (int n = 2; n <= 9; ++n) {
    const CartanType t{Series::A, n - 1};
    add(sl_label(n), t, "A1", n - 1);
    if (n >= 4) add(sl_label(n), t, "2A1", 2 * n - 4);
  }
  for (int n = 4; n <= 8; ++n) {
    const CartanType t{Series::D, n};
    add(so_label(n), t, "A1", 2 * n - 3);
    Partition three(2 * n - 2, 1);
    three[0] = 3;
    add(so_label(n), t, partition_str(three), 2 * n - 2);
    if (n >= 5) {
      Partition twos(2 * n - 4, 1);
      std::fill(twos.begin(), twos.begin() + 4, 2);
      add(so_label(n), t, partition_str(twos), 4 * n - 10);
    }
  }
  const std::vector<std::tuple<int, int, int>> e{{6, 11, 16}, {7, 17, 26}, {8, 29, 46}};
  for (auto [rank, mn, ntm] : e) {
    const CartanType t{Series::E, rank};
    add(t.name(), t, "A1", mn);
    add(t.name(), t, "2A1", ntm);
  }
  return rows;
}

}  // namespace ew::cli
