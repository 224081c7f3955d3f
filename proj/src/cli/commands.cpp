#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ew/cli.hpp"
#include "ew/errors.hpp"

namespace ew::cli {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, sep))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

const CartanType& need_group(const JobSpec& job) {
  if (!job.group) throw ValidationError(job.command + " needs --group");
  return *job.group;
}

std::string s_label(const std::optional<Rational>& s) { return s ? s->str() : "generic"; }

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(Rational::parse(item));
  return out;
}

// "1:2,3:-1" -> node charges
std::map<int, Rational> parse_node_charges(std::string_view text) {
  std::map<int, Rational> out;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    const int node = std::stoi(item.substr(0, colon));
    const Rational c = colon == std::string::npos ? Rational(1) : Rational::parse(item.substr(colon + 1));
    if (!out.emplace(node, c).second) throw ValidationError("node " + std::to_string(node) + " repeated");
  }
  if (out.empty()) throw ValidationError("expected node:charge pairs");
  return out;
}

// phi entries: "node:charge" puts the charge on -alpha_node; "a.b.c:charge"
// on minus the positive root with those simple-root coordinates.
std::vector<RootCharge> parse_phi(const RootSystem& rs, std::string_view text) {
  std::vector<RootCharge> out;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    const std::string where = item.substr(0, colon);
    const Rational c = colon == std::string::npos ? Rational(1) : Rational::parse(item.substr(colon + 1));
    RootVec root;
    if (where.find('.') != std::string::npos) {
      for (const auto& x : split(where, '.')) root.push_back(std::stoi(x));
      if (!rs.is_positive(root)) throw ValidationError("'" + where + "' is not a positive root");
    } else {
      const int node = std::stoi(where);
      rs.check_node(node);
      root = rs.simple_roots()[node - 1];
    }
    for (auto& x : root) x = -x;
    out.push_back({root, c});
  }
  return out;
}

std::string s_values_str(const std::vector<Rational>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].str();
  return out + ")";
}

void print_coeff_text(std::ostream& out, const CoeffExpr& c) {
  if (c.terms.empty()) {
    out << "W(s) = 0\n";
    return;
  }
  for (std::size_t i = 0; i < c.terms.size(); ++i) out << (i == 0 ? "W(s) = " : "     + ") << to_text(c.terms[i]) << "\n";
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "latex") return Format::Latex;
  if (text == "json") return Format::Json;
  throw ValidationError("unknown format '" + std::string(text) + "' (text, latex, json)");
}

std::optional<Rational> parse_s_value(std::string_view text) {
  if (text == "generic") return std::nullopt;
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError("s value '" + std::string(text) + "' is neither 'generic' nor p/q: " + e.what());
  }
}

ChargeMap parse_charges(std::string_view text) {
  ChargeMap out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("charge binding '" + item + "' needs slot=value");
    const std::string slot = trim(item.substr(0, eq));
    std::int64_t v = 0;
    try {
      v = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ValidationError("charge for '" + slot + "' must be an integer");
    }
    if (v == 0) throw ValidationError("charge for '" + slot + "' must be nonzero");
    out[slot] = v;
  }
  return out;
}

int cmd_coeff(const JobSpec& job, std::ostream& out) {
  const auto& type = need_group(job);
  if (!job.node) throw ValidationError("coeff needs --node");
  const auto spec = EisensteinSpec::degenerate(make_root_system(type), *job.node);
  ReductionOptions opts;
  opts.strategy = job.strategy;
  opts.threads = job.threads;

  CharacterSupport support;
  CoeffExpr c;
  std::optional<ReductionResult> stats;
  if (job.constant_term) {
    c = constant_term(spec, opts);
  } else {
    if (job.support.empty()) throw ValidationError("coeff needs --support (or --constant-term)");
    support = CharacterSupport::parse(job.support);
    const auto cache = CosetCache::from_env();
    const CosetTable table =
        cache ? cache->get_or_compute(spec, support.nodes(), opts) : coset_table_for(spec, support.nodes(), opts);
    stats = reduce(spec, support, table, opts.threads);
    c = stats->expr;
  }

  std::vector<std::string> points = job.s_values.empty() ? std::vector<std::string>{"generic"} : job.s_values;
  std::map<std::string, EulerianityVerdict> verdicts;
  bool pole = false;
  for (const auto& p : points) {
    const auto s = parse_s_value(p);
    auto v = eulerianity_report(c, s);
    pole = pole || v.kind == VerdictKind::Pole;
    verdicts[s_label(s)] = std::move(v);
  }

  struct NumericValue {
    double s, value;
  };
  std::vector<NumericValue> numeric;
  if (!job.eval_points.empty()) {
    const ChargeMap charges = parse_charges(job.charges);
    for (double s : job.eval_points) numeric.push_back({s, eval_coeff(c, s, charges)});
  }

  switch (job.format) {
    case Format::Json: {
      Json doc = result_to_json(spec, support, job.strategy, c, verdicts);
      if (job.constant_term) doc["constant_term"] = true;
      if (stats) {
        doc["cosets"] = {{"candidates", stats->candidates},
                         {"dropped_nongeneric", stats->dropped_nongeneric},
                         {"dropped_order", stats->dropped_order}};
      }
      if (!numeric.empty()) {
        Json vals = Json::array();
        NumericConfig cfg;
        for (const auto& n : numeric)
          vals.push_back({{"s", format_double(n.s)},
                          {"value", format_double(n.value)},
                          {"rel_error", format_double(cfg.target_rel_error)}});
        doc["numeric"] = vals;
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      out << to_latex(c) << "\n";
      for (const auto& [key, v] : verdicts) out << "% s = " << key << ": " << v.str() << "\n";
      break;
    case Format::Text: {
      out << type.name() << ", lambda = 2s*Lambda_" << *job.node << " - rho, ";
      if (job.constant_term)
        out << "constant term";
      else
        out << "support {" << support.str() << "}";
      out << ", " << to_string(job.strategy) << "\n";
      if (stats)
        out << "cosets: " << stats->candidates << " candidates, " << stats->dropped_nongeneric
            << " dropped (non-generic restricted parameter), " << stats->dropped_order << " dropped (forced zero), "
            << c.terms.size() << " terms\n";
      print_coeff_text(out, c);
      for (const auto& [key, v] : verdicts) {
        out << "verdict at s = " << key << ": " << v.str();
        if (v.kind == VerdictKind::Eulerian && v.term) {
          out << " [" << to_text(*v.term);
          if (v.weight != Rational(1)) out << ", weight " << v.weight;
          out << "]";
        }
        if (v.merged > 0) out << " (" << v.merged << " terms merged exactly)";
        out << "\n";
      }
      for (const auto& n : numeric) out << "W(" << format_double(n.s) << ") = " << format_double(n.value) << "\n";
      break;
    }
  }
  return pole ? kPole : kOk;
}

int cmd_table(const JobSpec& job, std::ostream& out) {
  bool all_pass = true;
  if (job.table == "realizations") {
    Json rows = Json::array();
    const auto cache = CosetCache::from_env();
    ReductionOptions opts;
    opts.threads = job.threads;
    std::size_t count = 0, failed = 0;
    for (const auto& row : realization_rows()) {
      if (job.table_group && row.type != *job.table_group) continue;
      const auto r = check_realization(row, opts, cache ? &*cache : nullptr);
      ++count;
      if (!r.pass) ++failed;
      all_pass = all_pass && r.pass;
      if (job.format == Format::Json) {
        Json probes = Json::array();
        for (const auto& p : r.probes)
          probes.push_back({{"orbit", p.probe.orbit},
                            {"support", p.probe.support},
                            {"expected", to_string(p.probe.expected)},
                            {"got", to_string(p.verdict.kind)},
                            {"terms", p.terms},
                            {"ok", p.ok}});
        rows.push_back({{"group", row.group_label},
                        {"representation", row.representation},
                        {"node", row.node},
                        {"s", s_label(row.s)},
                        {"pass", r.pass},
                        {"probes", probes}});
        continue;
      }
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << row.group_label << std::setw(13)
          << row.representation << "s_" << row.node << " = " << std::setw(8) << s_label(row.s);
      for (std::size_t i = 0; i < r.probes.size(); ++i) {
        const auto& p = r.probes[i];
        out << (i ? "; " : "") << p.probe.orbit << "{" << p.probe.support << "} " << to_string(p.verdict.kind);
        if (!p.ok) out << " (expected " << to_string(p.probe.expected) << ")";
      }
      out << "\n";
    }
    if (job.format == Format::Json)
      out << Json{{"schema_version", kSchemaVersion}, {"table", "realizations"}, {"rows", rows}, {"pass", all_pass}}.dump(2)
          << "\n";
    else
      out << count << " rows, " << failed << " FAIL\n";
  } else if (job.table == "gkdims") {
    Json rows = Json::array();
    for (const auto& row : gkdim_rows()) {
      all_pass = all_pass && row.pass;
      if (job.format == Format::Json) {
        rows.push_back({{"group", row.group_label},
                        {"orbit", row.orbit},
                        {"expected", row.expected},
                        {"catalog", row.catalog},
                        {"pass", row.pass}});
        continue;
      }
      out << (row.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << row.group_label << std::setw(14)
          << row.orbit << "GKdim " << row.catalog << " (table " << row.expected << ")\n";
    }
    if (job.format == Format::Json)
      out << Json{{"schema_version", kSchemaVersion}, {"table", "gkdims"}, {"rows", rows}, {"pass", all_pass}}.dump(2)
          << "\n";
  } else {
    throw ValidationError("unknown table '" + job.table + "' (realizations, gkdims)");
  }
  return all_pass ? kOk : kFailure;
}

int cmd_orbit(const JobSpec& job, std::ostream& out) {
  const auto& type = need_group(job);
  const auto cat = orbit_catalog(type);
  if (job.partition.empty() && job.label.empty()) {
    if (job.format == Format::Json) {
      out << catalog_to_json(cat).dump(2) << "\n";
      return kOk;
    }
    out << type.name() << " nilpotent orbits (" << cat.size() << ")\n";
    for (const auto& o : cat) {
      out << "  " << std::left << std::setw(20) << o.label << std::setw(10) << o.bala_carter << "dim " << std::setw(5)
          << o.dim << (o.minimal ? " minimal" : "") << (o.next_to_minimal ? " next-to-minimal" : "") << "\n";
    }
    return kOk;
  }
  const std::string key = !job.label.empty() ? job.label : partition_str(parse_partition(job.partition));
  const auto& o = find_orbit(cat, key);
  std::optional<int> verified;
  if (job.verify && (o.zero || !o.representative_nodes.empty())) {
    const auto g = make_chevalley(type);
    verified = orbit_dimension_of(*g, nilpotent_from_nodes(*g, o.representative_nodes));
  }
  if (job.format == Format::Json) {
    Json j = to_json(o);
    j["schema_version"] = kSchemaVersion;
    j["group"] = type.name();
    if (verified) j["centralizer_dim_check"] = *verified;
    out << j.dump(2) << "\n";
    return verified && *verified != o.dim ? kFailure : kOk;
  }
  out << type.name() << " orbit " << o.label << "\n";
  if (!o.bala_carter.empty()) out << "  Bala-Carter: " << o.bala_carter << "\n";
  out << "  dimension: " << o.dim << " (GK dimension " << o.dim / 2 << ")\n";
  std::string flags = o.zero ? "zero" : o.minimal ? "minimal" : o.next_to_minimal ? "next-to-minimal" : "";
  if (!flags.empty()) out << "  flags: " << flags << "\n";
  out << "  covers:";
  if (o.covers.empty()) out << " none";
  for (std::size_t i : o.covers) out << " " << cat[i].label;
  out << "\n";
  if (!o.representative_nodes.empty()) {
    out << "  representative:";
    for (std::size_t i = 0; i < o.representative_nodes.size(); ++i)
      out << (i ? " +" : "") << " X_{-alpha_" << o.representative_nodes[i] << "}";
    out << "\n";
  }
  if (verified) out << "  dim g - dim g_f = " << *verified << (*verified == o.dim ? " (matches)" : " (MISMATCH)") << "\n";
  return verified && *verified != o.dim ? kFailure : kOk;
}

int cmd_pair(const JobSpec& job, std::ostream& out) {
  const auto& type = need_group(job);
  const auto g = make_chevalley(type);
  const auto& rs = g->roots();

  WhittakerPair pair;
  std::optional<NeutralPair> neutral;
  if (!job.neutral.empty()) {
    neutral = neutral_pair_for_nodes(*g, parse_node_charges(job.neutral));
    pair = neutral->pair;
  } else {
    if (job.pair_s.empty()) throw ValidationError("pair needs --neutral or --S");
    pair.s_values = parse_rationals(job.pair_s);
    if (!job.phi.empty()) pair.phi = parse_phi(rs, job.phi);
    pair.validate(rs);
  }

  Json doc{{"schema_version", kSchemaVersion}, {"group", type.name()}};
  Json s_json = Json::array();
  for (const auto& v : pair.s_values) s_json.push_back(to_json(v));
  doc["S"] = s_json;

  const auto grading = grade_by(*g, pair.s_values);
  Json grades = Json::object();
  for (const auto& [ev, idx] : grading.spaces) grades[ev.str()] = idx.size();
  doc["grading"] = grades;

  const auto n = n_S_phi(*g, pair);
  const auto rad = omega_radical(*g, pair);
  const bool radical_ok = same_span(n, rad, static_cast<std::size_t>(g->dim()));
  std::size_t u = 0;
  for (const auto& [ev, idx] : grading.spaces)
    if (ev >= Rational(1)) u += idx.size();
  const int orbit_dim = orbit_dimension_of(*g, f_phi(*g, pair.phi));
  doc["u_S_dim"] = u;
  doc["n_S_phi_dim"] = n.size();
  doc["omega_radical_dim"] = rad.size();
  doc["radical_equals_n"] = radical_ok;
  doc["orbit_dim"] = orbit_dim;

  bool ok = radical_ok;
  if (neutral) {
    const auto sl2 = check_sl2(*g, *neutral);
    NilpotentOrbit orbit;
    orbit.type = type;
    orbit.dim = orbit_dim;
    const auto iso = isotropic_dimension_check(*g, *neutral, orbit);
    doc["sl2"] = {{"[h,e]=2e", sl2.he}, {"[h,f]=-2f", sl2.hf}, {"[e,f]=h", sl2.ef}};
    doc["isotropic"] = {{"I_max_dim", iso.i_max}, {"half_orbit_dim", orbit_dim / 2}, {"holds", iso.holds}};
    ok = ok && sl2.ok() && iso.holds;
  }

  std::optional<bool> dominated;
  WhittakerPair other;
  if (!job.dominates.empty() || !job.shift.empty()) {
    other.phi = pair.phi;
    if (!job.dominates.empty()) {
      other.s_values = parse_rationals(job.dominates);
    } else {
      const auto z = parse_rationals(job.shift);
      if (z.size() != pair.s_values.size()) throw ValidationError("--shift needs one value per simple root");
      other.s_values = pair.s_values;
      for (std::size_t i = 0; i < z.size(); ++i) other.s_values[i] += z[i];
    }
    dominated = dominates(*g, pair, other);
    Json o = Json::array();
    for (const auto& v : other.s_values) o.push_back(to_json(v));
    doc["dominates"] = {{"S", o}, {"result", *dominated}};
  }

  if (job.format == Format::Json) {
    out << doc.dump(2) << "\n";
    return ok ? kOk : kFailure;
  }
  out << type.name() << " Whittaker pair, S = " << s_values_str(pair.s_values) << " on the simple roots\n";
  out << "  grading:";
  for (const auto& [ev, idx] : grading.spaces) out << " " << ev << ":" << idx.size();
  out << "\n";
  out << "  dim u_S = " << u << ", dim n_{S,phi} = " << n.size() << ", dim rad(omega) = " << rad.size()
      << (radical_ok ? " (equal spans)" : " (DIFFERENT spans)") << "\n";
  out << "  orbit of f_phi: dim " << orbit_dim << "\n";
  if (neutral) {
    const auto sl2 = check_sl2(*g, *neutral);
    out << "  sl2 relations: [h,e]=2e " << (sl2.he ? "ok" : "FAILS") << ", [h,f]=-2f " << (sl2.hf ? "ok" : "FAILS")
        << ", [e,f]=h " << (sl2.ef ? "ok" : "FAILS") << "\n";
    out << "  isotropic: dim I_max = " << doc["isotropic"]["I_max_dim"].get<std::size_t>() << ", half orbit dim = "
        << orbit_dim / 2 << (doc["isotropic"]["holds"].get<bool>() ? " (holds)" : " (FAILS)") << "\n";
  }
  if (dominated)
    out << "  dominates (" << s_values_str(other.s_values) << ", phi): " << (*dominated ? "true" : "false") << "\n";
  return ok ? kOk : kFailure;
}

}  // namespace ew::cli
