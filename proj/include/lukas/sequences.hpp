#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "lukas/patterns.hpp"
#include "lukas/quotient.hpp"
#include "lukas/series.hpp"

namespace lukas {

// Generating functions of path sets: all paths (L) and the canonical subsets.
enum class SetSeries { L, B, Bbar, C, Cbar, E, Ebar };

/// A series is named either by a relation (class counts) or by a path set.
using Tag = std::variant<Relation, SetSeries>;

std::string_view tag_name(const Tag& t);
Tag parse_tag(std::string_view name);  // throws Errc::UnknownName

enum class SeriesMethod { Closed, Recurrence, Fixpoint };

std::string_view series_method_name(SeriesMethod m);
SeriesMethod parse_series_method(std::string_view name);

/// Methods defined for a tag, in the order closed, recurrence, fixpoint.
std::vector<SeriesMethod> available_methods(const Tag& t);

/// Coefficients 0..N of the closed-form generating function.
/// Throws Errc::NoClosedForm when the tag has none.
Series expand_closed(const Tag& t, int N);

/// Coefficients 0..N from the integer recurrence. Throws Errc::UnsupportedTag.
Series expand_recurrence(const Tag& t, int N);

/// Solves the tag's functional equation by iterated substitution from 1.
/// Throws Errc::NonConvergence if a round fails to extend the agreement.
Series solve_fixpoint(const Tag& t, int N);

/// lhs - rhs of the functional equation evaluated at the fixpoint solution.
Series fixpoint_residual(const Tag& t, int N);

Series expand(const Tag& t, SeriesMethod m, int N);

/// Number of paths of length n in the set (all paths for L), by enumeration.
std::uint64_t count_paths_in_set(SetSeries s, int n);

struct VerificationRow {
  int n = 0;
  std::string tag;
  std::string method;  // a SeriesMethod name, "oracle" or "characterization"
  BigInt value;
  BigInt reference;
  bool pass = false;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  bool passed() const;
};

struct CompareOptions {
  int oracle_bound = kDefaultOracleBound;
  bool parallel = true;
};

/// Per n <= N, values from every available method plus the oracle (when n is
/// within the bound) and, where one exists, the position-set count. Each is
/// checked against the published row for 1 <= n <= 10, 1 at n = 0, and the
/// oracle or else the first available method beyond.
VerificationReport compare(const Tag& t, int N, const CompareOptions& options = {});

std::string verification_csv(const VerificationReport& report);
nlohmann::json verification_json(const VerificationReport& report);

}  // namespace lukas
