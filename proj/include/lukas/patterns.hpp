#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lukas/path.hpp"

namespace lukas {

// The 17 equivalence relations. In the fixed patterns U means rise exactly
// +1; the families (Uk, UkD, UkF, FUk, DUk) accept any up step and record k.
enum class Relation { U, UU, UD, UF, DU, FU, F, D, FD, DF, DD, FF, Uk, UkD, UkF, FUk, DUk };

inline constexpr std::array<Relation, 17> kAllRelations = {
    Relation::U,  Relation::UU, Relation::UD, Relation::UF,  Relation::DU,  Relation::FU,
    Relation::F,  Relation::D,  Relation::FD, Relation::DF,  Relation::DD,  Relation::FF,
    Relation::Uk, Relation::UkD, Relation::UkF, Relation::FUk, Relation::DUk};

inline constexpr std::size_t kRelationCount = kAllRelations.size();

constexpr std::size_t index_of(Relation r) noexcept { return static_cast<std::size_t>(r); }

std::string_view relation_name(Relation r);
std::optional<Relation> find_relation(std::string_view name);
Relation parse_relation(std::string_view name);  // throws Errc::UnknownName

bool is_family(Relation r) noexcept;
int pattern_length(Relation r) noexcept;

/// One occurrence: 1-based position of its first step, and for family
/// relations the rise k of the up step involved (0 for fixed relations).
struct Occurrence {
  int position = 0;
  int k = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

using Signature = std::vector<Occurrence>;

Signature occurrences(const Path& p, Relation r);
std::vector<int> positions(const Signature& s);

/// Throws Errc::LengthMismatch when |p| != |q|.
bool equivalent(const Path& p, const Path& q, Relation r);

/// Compact byte encoding of occurrences(p, r), used to intern signatures.
/// Equal keys iff equal signatures for paths of equal length < 256.
std::string signature_key(const Path& p, Relation r);
void append_signature_key(std::string& out, std::span<const int> rises, Relation r);

/// Minimal ordinate reached by the points of the occurrence starting at the
/// 1-based `position` and spanning `length` steps.
int occurrence_height(const Path& p, int position, int length);

}  // namespace lukas
