#include "ew/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "ew/errors.hpp"

namespace ew {
namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_version(const Json& j) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
    throw ValidationError("unsupported JSON schema version (expected " + std::to_string(kSchemaVersion) + ")");
}

Json support_to_json(const CharacterSupport& support) {
  Json out = Json::object();
  for (const auto& [node, slot] : support.charges) out[std::to_string(node)] = slot;
  return out;
}

Json weight_to_json(const AffineWeight& w) {
  Json out = Json::array();
  for (const auto& c : w.coords) out.push_back(c.str());
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ValidationError("expected a rational as \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const AffineArg& a) { return {{"slope", to_json(a.slope)}, {"intercept", to_json(a.intercept)}}; }

AffineArg affine_from_json(const Json& j) {
  return {rational_from_json(j.at("slope")), rational_from_json(j.at("intercept"))};
}

Json to_json(const XiProduct& p) {
  Json out = Json::array();
  for (const auto& [arg, e] : p.factors()) out.push_back({{"arg", to_json(arg)}, {"exp", e}});
  return out;
}

XiProduct xi_from_json(const Json& j) {
  XiProduct p;
  for (const auto& f : j) p.multiply(affine_from_json(f.at("arg")), f.at("exp").get<int>());
  return p;
}

Json to_json(const BFactor& b) {
  Json params = Json::array();
  for (const auto& a : b.params) params.push_back(to_json(a));
  return {{"nodes", b.nodes}, {"charges", b.charges}, {"params", params}};
}

BFactor bfactor_from_json(const Json& j) {
  BFactor b;
  b.nodes = j.at("nodes").get<std::vector<int>>();
  b.charges = j.at("charges").get<std::vector<std::string>>();
  for (const auto& a : j.at("params")) b.params.push_back(affine_from_json(a));
  if (b.nodes.empty() || b.nodes.size() > 2 || b.charges.size() != b.nodes.size() || b.params.size() != b.nodes.size())
    throw ValidationError("building block needs one or two nodes with matching charges and parameters");
  return b;
}

Json to_json(const TermExpr& t) {
  Json blocks = Json::array();
  for (const auto& b : t.bfactors) blocks.push_back(to_json(b));
  return {{"coset", t.coset_id}, {"xi", to_json(t.xi)}, {"blocks", blocks}, {"text", to_text(t)}};
}

TermExpr term_from_json(const Json& j) {
  TermExpr t;
  t.coset_id = j.value("coset", "");
  t.xi = xi_from_json(j.at("xi"));
  for (const auto& b : j.at("blocks")) t.bfactors.push_back(bfactor_from_json(b));
  return t;
}

Json to_json(const CoeffExpr& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back(to_json(t));
  return {{"terms", terms}, {"text", to_text(c)}};
}

CoeffExpr coeff_from_json(const Json& j) {
  CoeffExpr c;
  for (const auto& t : j.at("terms")) c.terms.push_back(term_from_json(t));
  return c;
}

Json to_json(const EulerianityVerdict& v) {
  Json out{{"kind", to_string(v.kind)}, {"surviving", v.surviving}, {"merged", v.merged}};
  if (v.term) {
    out["term"] = to_json(*v.term);
    out["weight"] = to_json(v.weight);
  }
  if (v.pole) {
    out["pole"] = {{"s", to_json(v.pole->s0)}, {"cosets", v.pole->coset_ids}, {"orders", v.pole->orders}};
  }
  return out;
}

Json to_json(const RootSystem& rs) {
  Json fundamental = Json::array();
  for (const auto& row : rs.fundamental_weights()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    fundamental.push_back(r);
  }
  return {{"schema_version", kSchemaVersion},
          {"group", rs.type().name()},
          {"rank", rs.rank()},
          {"cartan_matrix", rs.cartan_matrix()},
          {"positive_roots", rs.positive_roots()},
          {"fundamental_weights", fundamental},
          {"weyl_group_order", rs.weyl_group_order()}};
}

Json to_json(const NilpotentOrbit& o) {
  Json out{{"label", o.label},          {"dim", o.dim},
           {"gk_dim", o.dim / 2},       {"zero", o.zero},
           {"minimal", o.minimal},      {"next_to_minimal", o.next_to_minimal},
           {"covers", o.covers},        {"representative_nodes", o.representative_nodes}};
  if (!o.partition.empty()) out["partition"] = o.partition;
  if (o.very_even_class != 0) out["very_even_class"] = o.very_even_class == 1 ? "I" : "II";
  if (!o.bala_carter.empty()) out["bala_carter"] = o.bala_carter;
  return out;
}

Json catalog_to_json(const std::vector<NilpotentOrbit>& catalog) {
  Json orbits = Json::array();
  for (const auto& o : catalog) orbits.push_back(to_json(o));
  Json closure = Json::array();
  const auto c = closure_order(catalog);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (i != j && c[i][j]) closure.push_back({i, j});
  return {{"schema_version", kSchemaVersion},
          {"group", catalog.empty() ? "" : catalog.front().type.name()},
          {"orbits", orbits},
          {"closure", closure}};
}

Json result_to_json(const EisensteinSpec& spec, const CharacterSupport& support, CosetStrategy strategy,
                    const CoeffExpr& c, const std::map<std::string, EulerianityVerdict>& verdicts) {
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back(to_json(t));
  Json vs = Json::object();
  for (const auto& [key, v] : verdicts) vs[key] = to_json(v);
  Json out{{"schema_version", kSchemaVersion},
           {"group", spec.rs->type().name()},
           {"lambda", weight_to_json(spec.lambda)},
           {"support", support_to_json(support)},
           {"strategy", to_string(strategy)},
           {"terms", terms},
           {"text", to_text(c)},
           {"latex", to_latex(c)},
           {"verdicts", vs}};
  if (spec.inducing_node) out["node"] = *spec.inducing_node;
  return out;
}

Json to_json(const CosetTable& t) {
  Json reps = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    reps.push_back({{"word", t.word_vector(i)}, {"key", t.key(i)}, {"rho", t.rho_image(i)}});
  return {{"schema_version", kSchemaVersion},
          {"group", t.parent()->type().name()},
          {"support", t.support()},
          {"levi", t.levi()},
          {"strategy", to_string(t.strategy())},
          {"reps", reps}};
}

CosetTable coset_table_from_json(const Json& j, const RootSystemPtr& rs) {
  check_version(j);
  if (j.at("group").get<std::string>() != rs->type().name())
    throw ValidationError("coset table is for " + j.at("group").get<std::string>() + ", not " + rs->type().name());
  CosetTable t(rs, j.at("support").get<std::vector<int>>(), parse_strategy(j.at("strategy").get<std::string>()),
               j.at("levi").get<std::vector<int>>());
  const auto r = static_cast<std::size_t>(rs->rank());
  for (const auto& rep : j.at("reps")) {
    const auto word = rep.at("word").get<std::vector<int>>();
    const auto key = rep.at("key").get<std::vector<int>>();
    const auto rho = rep.at("rho").get<std::vector<int>>();
    if (key.size() != r || rho.size() != r) throw ValidationError("coset table entry has the wrong rank");
    std::vector<std::uint8_t> letters;
    for (int x : word) {
      rs->check_node(x);
      letters.push_back(static_cast<std::uint8_t>(x));
    }
    t.add(letters, key, rho);
  }
  t.sort();
  return t;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

CosetCache::CosetCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw ValidationError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::optional<CosetCache> CosetCache::from_env() {
  const char* dir = std::getenv("EWHIT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return CosetCache(dir);
}

std::string CosetCache::key(const CartanType& type, const std::vector<int>& levi, const std::vector<int>& support,
                            CosetStrategy strategy) {
  const Json k{{"group", type.name()},
               {"levi", sorted(levi)},
               {"support", sorted(support)},
               {"strategy", to_string(strategy)},
               {"schema_version", kSchemaVersion}};
  return fnv1a_hex(k.dump());
}

std::filesystem::path CosetCache::path_for(const std::string& key) const { return dir_ / ("cosets-" + key + ".json"); }

std::optional<CosetTable> CosetCache::load(const RootSystemPtr& rs, const std::vector<int>& levi,
                                           const std::vector<int>& support, CosetStrategy strategy) const {
  std::ifstream in(path_for(key(rs->type(), levi, support, strategy)));
  if (!in) return std::nullopt;
  try {
    CosetTable t = coset_table_from_json(Json::parse(in), rs);
    // guard against hash collisions and stale files
    if (t.strategy() != strategy || t.levi() != sorted(levi) || t.support() != sorted(support)) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void CosetCache::store(const CosetTable& table) const {
  const auto target = path_for(key(table.parent()->type(), table.levi(), table.support(), table.strategy()));
  auto tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << to_json(table).dump() << '\n';
    if (!out) throw std::runtime_error("short write to cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

CosetTable CosetCache::get_or_compute(const EisensteinSpec& spec, const std::vector<int>& support,
                                      const ReductionOptions& opts, bool* hit) const {
  const std::vector<int> levi = opts.strategy == CosetStrategy::Exhaustive ? std::vector<int>{} : spec.levi();
  if (auto cached = load(spec.rs, levi, support, opts.strategy)) {
    if (hit) *hit = true;
    return std::move(*cached);
  }
  if (hit) *hit = false;
  CosetTable t = coset_table_for(spec, support, opts);
  store(t);
  return t;
}

}  // namespace ew
