#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lukas/error.hpp"

namespace lukas {

// A step is stored as its rise: D = -1, F = 0, U = U_1 = +1, U_k = +k.
inline constexpr int kDown = -1;
inline constexpr int kFlat = 0;
inline constexpr int kUp = 1;

inline constexpr bool is_up(int rise) noexcept { return rise >= 1; }

enum class Family { Lukasiewicz, Motzkin, Dyck };

// Canonical subsets of Lukasiewicz paths used as class representatives.
enum class Subset { B, Bbar, C, Cbar, E, Ebar, Fset };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
std::string_view subset_name(Subset s);
Subset parse_subset(std::string_view name);

bool rise_in_family(int rise, Family f) noexcept;

/// A lattice path from (0,0) to (n,0) that never goes below the x-axis.
///
/// Instances are always valid Lukasiewicz paths; the only ways to obtain one
/// are validate(), parse(), concatenation and the enumerators.
class Path {
 public:
  Path() = default;  // the empty path

  static Path validate(std::span<const int> rises, Family family = Family::Lukasiewicz);
  static Path validate(std::initializer_list<int> rises, Family family = Family::Lukasiewicz) {
    return validate(std::span<const int>(rises.begin(), rises.size()), family);
  }

  /// Parses the token grammar over {D, F, U, U<k>} (k >= 2), e.g. "U5DDFF".
  static Path parse(std::string_view text, Family family = Family::Lukasiewicz);

  std::string str() const;

  std::size_t size() const noexcept { return rises_.size(); }
  int length() const noexcept { return static_cast<int>(rises_.size()); }
  bool empty() const noexcept { return rises_.empty(); }
  int operator[](std::size_t i) const noexcept { return rises_[i]; }
  std::span<const int> rises() const noexcept { return rises_; }
  auto begin() const noexcept { return rises_.begin(); }
  auto end() const noexcept { return rises_.end(); }

  /// Ordinates of the n+1 points P_0..P_n.
  std::vector<int> ordinates() const;

  bool in_family(Family f) const noexcept;

  friend Path operator+(const Path& a, const Path& b);

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  explicit Path(std::vector<int> rises) : rises_(std::move(rises)) {}

  std::vector<int> rises_;

  friend class PathEnumerator;
};

std::string to_string(std::span<const int> rises);

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

/// Depth-first generator of all paths of a given length in lexicographic
/// order of rise sequences (D < F < U < U_2 < ...). The recursion prunes on
/// height <= remaining length, which also bounds k in U_k.
class PathEnumerator {
 public:
  using Visitor = std::function<void(const Path&)>;

  PathEnumerator(int length, Family family);

  /// Admissible first steps; each one defines an independent partition.
  std::vector<int> first_steps() const;

  void for_each(const Visitor& visit) const;
  void for_each_with_first(int first_rise, const Visitor& visit) const;

 private:
  void descend(Path& current, int height, const Visitor& visit) const;

  int length_;
  Family family_;
};

std::vector<Path> enumerate_paths(int n, Family family = Family::Lukasiewicz);

bool in_subset(const Path& p, Subset s);

}  // namespace lukas
