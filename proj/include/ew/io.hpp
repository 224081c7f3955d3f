#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "ew/orbits.hpp"
#include "ew/reduction.hpp"

namespace ew {

using Json = nlohmann::json;

/// Version stamped into every JSON document this library writes. Readers
/// reject other versions.
inline constexpr int kSchemaVersion = 1;

// Rationals travel as "p/q" strings so that nothing is rounded.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"slope": "2", "intercept": "-4"}
Json to_json(const AffineArg& a);
AffineArg affine_from_json(const Json& j);

/// [{"arg": ..., "exp": k}, ...] in canonical map order.
Json to_json(const XiProduct& p);
XiProduct xi_from_json(const Json& j);

Json to_json(const BFactor& b);
BFactor bfactor_from_json(const Json& j);

/// Structured form plus a "text" field holding to_text(t) for reading.
Json to_json(const TermExpr& t);
TermExpr term_from_json(const Json& j);

Json to_json(const CoeffExpr& c);
CoeffExpr coeff_from_json(const Json& j);

Json to_json(const EulerianityVerdict& v);
Json to_json(const RootSystem& rs);
Json to_json(const NilpotentOrbit& o);
/// {"schema_version", "group", "orbits": [...], "closure": [[i, j], ...]}
Json catalog_to_json(const std::vector<NilpotentOrbit>& catalog);

/// Result document {schema_version, group, lambda, support, strategy,
/// terms[], verdicts{}}. Verdict keys are "generic" or the s-value.
Json result_to_json(const EisensteinSpec& spec, const CharacterSupport& support, CosetStrategy strategy,
                    const CoeffExpr& c, const std::map<std::string, EulerianityVerdict>& verdicts);

/// {schema_version, group, support, levi, strategy, reps: [{word, key, rho}]}
Json to_json(const CosetTable& t);
/// Rebuilds a table over `rs`; throws ValidationError on a schema, group or
/// shape mismatch.
CosetTable coset_table_from_json(const Json& j, const RootSystemPtr& rs);

/// 64-bit FNV-1a of a string, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

/// On-disk cache of coset tables, one JSON file per (group, levi, support,
/// strategy), named by the content hash of that key. Writes go to a
/// temporary file in the same directory which is then renamed into place.
class CosetCache {
 public:
  explicit CosetCache(std::filesystem::path dir);

  /// Cache rooted at $EWHIT_CACHE_DIR, or nullopt when the variable is unset
  /// or empty.
  static std::optional<CosetCache> from_env();

  const std::filesystem::path& dir() const { return dir_; }

  static std::string key(const CartanType& type, const std::vector<int>& levi, const std::vector<int>& support,
                         CosetStrategy strategy);
  std::filesystem::path path_for(const std::string& key) const;

  /// Cached table, or nullopt when absent. Unreadable or mismatching files
  /// count as absent.
  std::optional<CosetTable> load(const RootSystemPtr& rs, const std::vector<int>& levi,
                                 const std::vector<int>& support, CosetStrategy strategy) const;
  void store(const CosetTable& table) const;

  /// load, or compute through coset_table_for and store. `hit` reports
  /// which happened.
  CosetTable get_or_compute(const EisensteinSpec& spec, const std::vector<int>& support,
                            const ReductionOptions& opts, bool* hit = nullptr) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace ew
