#include "lukas/quotient.hpp"

#include <cstdlib>
#include <future>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace lukas {

std::string_view method_name(CountMethod m) {
  switch (m) {
    case CountMethod::Oracle: return "oracle";
    case CountMethod::Characterization: return "characterization";
    case CountMethod::Canonical: return "canonical";
  }
  return "?";
}

int oracle_bound_from_env() {
  if (const char* env = std::getenv("LUKAS_ORACLE_BOUND")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleBound;
}

namespace {

void check_bound(int n, const OracleOptions& options) {
  if (n < 0) throw Error(Errc::ResourceLimit, "negative length", n);
  if (n > options.bound) {
    throw Error(Errc::ResourceLimit,
                "length " + std::to_string(n) + " exceeds the oracle bound " +
                    std::to_string(options.bound),
                n);
  }
  if (n > 255) throw Error(Errc::ResourceLimit, "signature keys support lengths < 256", n);
}

// Runs `work(first_rise)` for every partition of L_n and returns the partial
// results in first-step order. Merging is left to the caller and must be
// order-independent.
template <class Work>
auto sweep_partitions(int n, const OracleOptions& options, Work work)
    -> std::vector<decltype(work(0))> {
  using Partial = decltype(work(0));
  const PathEnumerator paths(n, Family::Lukasiewicz);
  std::vector<Partial> partials;
  if (n == 0) {
    partials.push_back(work(-1));
    return partials;
  }
  const auto firsts = paths.first_steps();
  if (!options.parallel || firsts.size() < 2) {
    for (int f : firsts) partials.push_back(work(f));
    return partials;
  }
  std::vector<std::future<Partial>> jobs;
  jobs.reserve(firsts.size());
  for (int f : firsts) jobs.push_back(std::async(std::launch::async, work, f));
  for (auto& j : jobs) partials.push_back(j.get());
  return partials;
}

// Visits either the partition starting with `first_rise` or, for n = 0, the
// single empty path (first_rise = -1).
void visit_partition(int n, int first_rise, const PathEnumerator::Visitor& visit) {
  if (n == 0) {
    visit(Path());
    return;
  }
  PathEnumerator(n, Family::Lukasiewicz).for_each_with_first(first_rise, visit);
}

using KeySet = std::unordered_set<std::string>;
using KeyCounts = std::unordered_map<std::string, std::uint64_t>;

}  // namespace

std::uint64_t count_classes_among(int n, Relation r, const PathFilter& keep,
                                  const OracleOptions& options) {
  check_bound(n, options);
  auto partials = sweep_partitions(n, options, [&](int first) {
    KeySet keys;
    std::string key;
    visit_partition(n, first, [&](const Path& p) {
      if (keep && !keep(p)) return;
      key.clear();
      append_signature_key(key, p.rises(), r);
      keys.insert(key);
    });
    return keys;
  });
  KeySet merged;
  for (auto& part : partials) merged.merge(part);
  return merged.size();
}

ClassCount count_classes_oracle(int n, Relation r, const OracleOptions& options) {
  return {n, r, CountMethod::Oracle, count_classes_among(n, r, nullptr, options)};
}

std::array<std::uint64_t, kRelationCount> count_classes_oracle_all(int n,
                                                                   const OracleOptions& options) {
  check_bound(n, options);
  using Sets = std::array<KeySet, kRelationCount>;
  auto partials = sweep_partitions(n, options, [&](int first) {
    Sets sets;
    std::string key;
    visit_partition(n, first, [&](const Path& p) {
      for (Relation r : kAllRelations) {
        key.clear();
        append_signature_key(key, p.rises(), r);
        sets[index_of(r)].insert(key);
      }
    });
    return sets;
  });
  std::array<std::uint64_t, kRelationCount> counts{};
  for (std::size_t i = 0; i < kRelationCount; ++i) {
    KeySet merged;
    for (auto& part : partials) merged.merge(part[i]);
    counts[i] = merged.size();
  }
  return counts;
}

std::map<std::uint64_t, std::uint64_t> class_size_histogram(int n, Relation r,
                                                           const OracleOptions& options) {
  check_bound(n, options);
  auto partials = sweep_partitions(n, options, [&](int first) {
    KeyCounts sizes;
    std::string key;
    visit_partition(n, first, [&](const Path& p) {
      key.clear();
      append_signature_key(key, p.rises(), r);
      ++sizes[key];
    });
    return sizes;
  });
  KeyCounts merged;
  for (const auto& part : partials) {
    for (const auto& [key, size] : part) merged[key] += size;
  }
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& [key, size] : merged) ++histogram[size];
  return histogram;
}

bool has_position_characterization(Relation r) noexcept {
  switch (r) {
    case Relation::F:
    case Relation::D:
    case Relation::FD:
    case Relation::DF:
    case Relation::DD: return true;
    default: return false;
  }
}

namespace {

void require_characterized(Relation r) {
  if (!has_position_characterization(r)) {
    throw Error(Errc::UnsupportedPattern,
                "no position-set characterization for " + std::string(relation_name(r)));
  }
}

void require_countable(int n) {
  if (n < 0 || n > kPositionSetCountLimit) {
    throw Error(Errc::ResourceLimit,
                "position-set counts are limited to 0 <= n <= " +
                    std::to_string(kPositionSetCountLimit),
                n);
  }
}

}  // namespace

bool is_valid_position_set(int n, Relation pattern, std::span<const int> positions) {
  require_characterized(pattern);
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (positions[j] < 1 || positions[j] > n) return false;
    if (j > 0 && positions[j] <= positions[j - 1]) return false;
  }
  const auto size = static_cast<long long>(positions.size());
  switch (pattern) {
    case Relation::F: return size != n - 1;
    case Relation::D: return positions.empty() || positions.front() >= 2;
    case Relation::FD:
    case Relation::DF:
    case Relation::DD: {
      if (positions.empty()) return true;
      if (positions.front() < 2 || positions.back() > n - 1) return false;
      for (std::size_t j = 1; j < positions.size(); ++j) {
        const int gap = positions[j] - positions[j - 1];
        if (pattern == Relation::DD ? gap == 2 : gap <= 1) return false;
      }
      return true;
    }
    default: return false;
  }
}

std::uint64_t count_position_sets_by_subsets(int n, Relation pattern) {
  require_characterized(pattern);
  if (n < 0 || n > kSubsetEnumerationLimit) {
    throw Error(Errc::ResourceLimit,
                "subset enumeration is limited to n <= " + std::to_string(kSubsetEnumerationLimit),
                n);
  }
  std::uint64_t count = 0;
  std::vector<int> positions;
  positions.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    positions.clear();
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) positions.push_back(i + 1);
    }
    if (is_valid_position_set(n, pattern, positions)) ++count;
  }
  return count;
}

std::uint64_t count_position_sets_by_automaton(int n, Relation pattern) {
  require_characterized(pattern);
  require_countable(n);
  // state[s] = number of admissible prefixes ending in automaton state s.
  std::array<std::uint64_t, 4> state{};
  switch (pattern) {
    case Relation::F: {
      // s = number of unchosen positions so far, capped at 2. Reject s == 1.
      state = {1, 0, 0, 0};
      for (int i = 1; i <= n; ++i) {
        state = {state[0], state[0] + state[1], state[1] + 2 * state[2], 0};
      }
      return state[0] + state[2];
    }
    case Relation::D: {
      std::uint64_t count = 1;
      for (int i = 2; i <= n; ++i) count *= 2;
      return count;
    }
    case Relation::FD:
    case Relation::DF: {
      // s0: previous position not chosen, s1: previous position chosen.
      state = {1, 0, 0, 0};
      for (int i = 1; i <= n; ++i) {
        const bool allowed = i >= 2 && i <= n - 1;
        state = {state[0] + state[1], allowed ? state[0] : 0, 0, 0};
      }
      return state[0] + state[1];
    }
    case Relation::DD: {
      // s0: nothing chosen within the last two positions, s1: previous
      // position chosen, s2: the one before it chosen (choosing now would
      // make a gap of exactly 2).
      state = {1, 0, 0, 0};
      for (int i = 1; i <= n; ++i) {
        const bool allowed = i >= 2 && i <= n - 1;
        const std::uint64_t pick = allowed ? state[0] + state[1] : 0;
        state = {state[0] + state[2], pick, state[1], 0};
      }
      return state[0] + state[1] + state[2];
    }
    default: return 0;
  }
}

ClassCount count_valid_position_sets(int n, Relation pattern) {
  require_characterized(pattern);
  require_countable(n);
  const std::uint64_t count = n <= kSubsetEnumerationLimit
                                  ? count_position_sets_by_subsets(n, pattern)
                                  : count_position_sets_by_automaton(n, pattern);
  return {n, pattern, CountMethod::Characterization, count};
}

std::string class_counts_csv(std::span<const ClassCount> rows) {
  std::string out = "n,relation,method,count\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + ',' + std::string(relation_name(row.relation)) + ',' +
           std::string(method_name(row.method)) + ',' + std::to_string(row.count) + '\n';
  }
  return out;
}

nlohmann::json class_counts_json(std::span<const ClassCount> rows) {
  auto out = nlohmann::json::array();
  for (const auto& row : rows) {
    out.push_back({{"n", row.n},
                   {"relation", relation_name(row.relation)},
                   {"method", method_name(row.method)},
                   {"count", row.count}});
  }
  return out;
}

}  // namespace lukas
