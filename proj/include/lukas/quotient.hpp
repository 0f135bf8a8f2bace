#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "lukas/patterns.hpp"

namespace lukas {

enum class CountMethod { Oracle, Characterization, Canonical };

std::string_view method_name(CountMethod m);

struct ClassCount {
  int n = 0;
  Relation relation = Relation::U;
  CountMethod method = CountMethod::Oracle;
  std::uint64_t count = 0;

  friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

inline constexpr int kDefaultOracleBound = 13;

struct OracleOptions {
  int bound = kDefaultOracleBound;
  // Split the sweep by first step and run the partitions on worker threads.
  bool parallel = true;
};

/// Default bound, overridden by the LUKAS_ORACLE_BOUND environment variable.
int oracle_bound_from_env();

using PathFilter = std::function<bool(const Path&)>;

/// Number of distinct signatures of `r` over all Lukasiewicz paths of length
/// n. Throws Errc::ResourceLimit when n exceeds options.bound.
ClassCount count_classes_oracle(int n, Relation r, const OracleOptions& options = {});

/// One sweep over L_n computing the class count of every relation.
std::array<std::uint64_t, kRelationCount> count_classes_oracle_all(
    int n, const OracleOptions& options = {});

/// Class count restricted to the paths of L_n accepted by `keep`.
std::uint64_t count_classes_among(int n, Relation r, const PathFilter& keep,
                                  const OracleOptions& options = {});

/// Map from class size to the number of classes of that size.
std::map<std::uint64_t, std::uint64_t> class_size_histogram(int n, Relation r,
                                                           const OracleOptions& options = {});

// Position-set characterizations for F, D, FD, DF, DD.

bool has_position_characterization(Relation r) noexcept;

/// True iff `positions` can be the occurrence positions of `pattern` in some
/// path of length n. Throws Errc::UnsupportedPattern for other relations.
bool is_valid_position_set(int n, Relation pattern, std::span<const int> positions);

/// Counts valid position sets without enumerating paths: subset enumeration
/// for n <= 20, a left-to-right automaton count above that.
ClassCount count_valid_position_sets(int n, Relation pattern);

inline constexpr int kSubsetEnumerationLimit = 20;
inline constexpr int kPositionSetCountLimit = 62;

std::uint64_t count_position_sets_by_subsets(int n, Relation pattern);
std::uint64_t count_position_sets_by_automaton(int n, Relation pattern);

std::string class_counts_csv(std::span<const ClassCount> rows);
nlohmann::json class_counts_json(std::span<const ClassCount> rows);

}  // namespace lukas
