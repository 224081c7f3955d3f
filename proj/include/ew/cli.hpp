#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ew/io.hpp"
#include "ew/numeval.hpp"
#include "ew/orbits.hpp"
#include "ew/reduction.hpp"

namespace ew::cli {

/// Process exit codes, stable for scripts.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // anything else, including a FAIL row in a table report
  kPole = 2,
  kInfeasible = 3,
  kValidation = 4,
};

enum class Format { Text, Latex, Json };
Format parse_format(std::string_view text);

/// Everything a command needs, after flag and config-file parsing.
struct JobSpec {
  std::string command;
  std::optional<CartanType> group;
  std::optional<int> node;
  std::string support;
  /// Each entry is "generic" or a rational "p/q".
  std::vector<std::string> s_values;
  CosetStrategy strategy = CosetStrategy::LeviPruned;
  Format format = Format::Text;
  unsigned threads = 1;
  bool constant_term = false;
  /// Real points for numeric evaluation, with slot bindings like "m=1,n=-2".
  std::vector<double> eval_points;
  std::string charges;
  // orbit
  std::string partition, label;
  bool verify = false;
  // pair
  std::string neutral, pair_s, phi, dominates, shift;
  // table
  std::string table;
  std::optional<CartanType> table_group;
};

/// Parses "generic" or a rational.
std::optional<Rational> parse_s_value(std::string_view text);
/// "m=1,n=-2"
ChargeMap parse_charges(std::string_view text);

int cmd_coeff(const JobSpec& job, std::ostream& out);
int cmd_table(const JobSpec& job, std::ostream& out);
int cmd_orbit(const JobSpec& job, std::ostream& out);
int cmd_pair(const JobSpec& job, std::ostream& out);

/// Full command line: parses, dispatches, maps exceptions to exit codes and
/// writes diagnostics to err. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Table reports --------------------------------------------------------------

/// One character support probed at a realization point, with the verdict
/// the realization predicts (Eulerian for the orbit it realizes, Zero for
/// larger ones).
struct Probe {
  std::string orbit;
  std::string support;
  VerdictKind expected;
};

struct RealizationRow {
  CartanType type;
  std::string group_label;  // "SL_4", "SO_{5,5}", "E6"
  std::string representation;  // "min", "ntm (2A1)''", ...
  int node = 1;
  std::optional<Rational> s;
  std::vector<Probe> probes;
};

struct ProbeOutcome {
  Probe probe;
  EulerianityVerdict verdict;
  std::size_t terms = 0;
  bool ok = false;
};

struct RowOutcome {
  RealizationRow row;
  std::vector<ProbeOutcome> probes;
  bool pass = false;
};

/// Minimal and next-to-minimal realization rows: SL_n for n = 3..7, SO_{n,n}
/// for n = 4..7 and E6, E7, E8.
std::vector<RealizationRow> realization_rows();
RowOutcome check_realization(const RealizationRow& row, const ReductionOptions& opts = {},
                             const CosetCache* cache = nullptr);

struct GkRow {
  std::string group_label;
  CartanType type;
  std::string orbit;
  int expected = 0;
  int catalog = 0;
  bool pass = false;
};

/// Catalog orbit dimensions halved against the tabulated GK dimensions:
/// SL_n for n = 2..9, SO_{n,n} for n = 4..8 and E6, E7, E8.
std::vector<GkRow> gkdim_rows();

}  // namespace ew::cli
