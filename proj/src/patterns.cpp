#include "lukas/patterns.hpp"

#include <algorithm>

namespace lukas {

namespace {

constexpr std::array<std::string_view, kRelationCount> kNames = {
    "U", "UU", "UD", "UF", "DU", "FU", "F", "D", "FD", "DF", "DD", "FF",
    "Uk", "UkD", "UkF", "FUk", "DUk"};

// For each relation, the match test at index i. Returns k (>= 1) for family
// matches, 1 for fixed matches, 0 for no match.
inline int match_at(std::span<const int> s, std::size_t i, Relation r) noexcept {
  const std::size_t n = s.size();
  const int a = s[i];
  const bool has_next = i + 1 < n;
  const int b = has_next ? s[i + 1] : 0;
  switch (r) {
    case Relation::U: return a == kUp;
    case Relation::F: return a == kFlat;
    case Relation::D: return a == kDown;
    case Relation::UU: return has_next && a == kUp && b == kUp;
    case Relation::UD: return has_next && a == kUp && b == kDown;
    case Relation::UF: return has_next && a == kUp && b == kFlat;
    case Relation::DU: return has_next && a == kDown && b == kUp;
    case Relation::FU: return has_next && a == kFlat && b == kUp;
    case Relation::FD: return has_next && a == kFlat && b == kDown;
    case Relation::DF: return has_next && a == kDown && b == kFlat;
    case Relation::DD: return has_next && a == kDown && b == kDown;
    case Relation::FF: return has_next && a == kFlat && b == kFlat;
    case Relation::Uk: return is_up(a) ? a : 0;
    case Relation::UkD: return has_next && is_up(a) && b == kDown ? a : 0;
    case Relation::UkF: return has_next && is_up(a) && b == kFlat ? a : 0;
    case Relation::FUk: return has_next && a == kFlat && is_up(b) ? b : 0;
    case Relation::DUk: return has_next && a == kDown && is_up(b) ? b : 0;
  }
  return 0;
}

}  // namespace

std::string_view relation_name(Relation r) { return kNames[index_of(r)]; }

std::optional<Relation> find_relation(std::string_view name) {
  for (Relation r : kAllRelations) {
    if (kNames[index_of(r)] == name) return r;
  }
  return std::nullopt;
}

Relation parse_relation(std::string_view name) {
  if (auto r = find_relation(name)) return *r;
  throw Error(Errc::UnknownName, "unknown relation '" + std::string(name) + "'");
}

bool is_family(Relation r) noexcept { return index_of(r) >= index_of(Relation::Uk); }

int pattern_length(Relation r) noexcept {
  switch (r) {
    case Relation::U:
    case Relation::F:
    case Relation::D:
    case Relation::Uk: return 1;
    default: return 2;
  }
}

Signature occurrences(const Path& p, Relation r) {
  Signature sig;
  const auto s = p.rises();
  const bool family = is_family(r);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (const int m = match_at(s, i, r)) {
      sig.push_back({static_cast<int>(i + 1), family ? m : 0});
    }
  }
  return sig;
}

std::vector<int> positions(const Signature& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (const auto& o : s) out.push_back(o.position);
  return out;
}

bool equivalent(const Path& p, const Path& q, Relation r) {
  if (p.size() != q.size()) {
    throw Error(Errc::LengthMismatch,
                "paths of lengths " + std::to_string(p.size()) + " and " +
                    std::to_string(q.size()) + " cannot be compared",
                static_cast<long long>(q.size()));
  }
  return occurrences(p, r) == occurrences(q, r);
}

void append_signature_key(std::string& out, std::span<const int> rises, Relation r) {
  const bool family = is_family(r);
  for (std::size_t i = 0; i < rises.size(); ++i) {
    if (const int m = match_at(rises, i, r)) {
      out.push_back(static_cast<char>(i + 1));
      if (family) out.push_back(static_cast<char>(m));
    }
  }
}

std::string signature_key(const Path& p, Relation r) {
  std::string key;
  append_signature_key(key, p.rises(), r);
  return key;
}

int occurrence_height(const Path& p, int position, int length) {
  if (position < 1 || length < 1 || position + length - 1 > p.length()) {
    throw Error(Errc::InvalidPositionSet,
                "occurrence at " + std::to_string(position) + " does not fit the path", position);
  }
  const auto ys = p.ordinates();
  const auto first = ys.begin() + (position - 1);
  return *std::min_element(first, first + length + 1);
}

}  // namespace lukas
