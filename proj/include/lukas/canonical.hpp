#pragma once

#include <span>
#include <string_view>

#include "lukas/path.hpp"
#include "lukas/patterns.hpp"

namespace lukas {

// Motzkinization: Motzkin paths in the same class as the input.

/// Recursive map L -> M preserving the positions of U, UU and UD.
Path phi(const Path& p);
/// Rebuilds p around its maximal (DU)^a runs; DU positions are preserved.
Path motzkinize_du(const Path& p);
/// Same for alpha in {FU, UF}, dropping greedily after each alpha-run.
Path motzkinize_runs(const Path& p, Relation alpha);

/// Class representative for U, UU or UD: the up steps forced by the
/// signature, every other step a D when above the axis and F otherwise.
/// Unlike phi this depends only on the signature.
Path motzkin_representative(const Path& p, Relation r);

// Projections onto the canonical subsets (one representative per class).

Path to_b(const Path& p);  // Uk-classes   -> B
Path to_c(const Path& p);  // UkD-classes  -> C
Path to_e(const Path& p);  // UkF-classes  -> E
Path to_f(const Path& p);  // FF-classes   -> Fset

// Witness paths realizing a valid position set. All throw
// Errc::InvalidPositionSet when the set violates the characterization.

Path witness_f(int n, std::span<const int> positions);
Path witness_d(int n, std::span<const int> positions);
Path witness_adj(int n, std::span<const int> positions, Relation pattern);  // FD or DF
Path witness_dd(int n, std::span<const int> positions);
Path witness(int n, std::span<const int> positions, Relation pattern);

// Bijections.

/// Block-wise map L -> M: U_k L_1 D ... L_k D  ->  U psi(L_1) F ... psi(L_k) D.
Path psi(const Path& p);
/// Rewrites every U_kF as FU_k, left to right.
Path xi(const Path& p);
/// Rewrites every U_kD as DU_k and wraps the result in U ... D.
Path theta(const Path& p);

enum class Target { Motzkin, B, C, E, Fset, Witness };

std::string_view target_name(Target t);

struct CanonicalForm {
  Path path;
  Relation relation = Relation::U;
  Target target = Target::Motzkin;
};

/// Representative of p's class under r built by the matching construction.
/// Throws Errc::UnsupportedPattern for FUk and DUk, which have no direct
/// construction (their counts go through xi and theta).
CanonicalForm canonical_form(const Path& p, Relation r);

enum class MapName { Phi, Du, Runs, ToB, ToC, ToE, ToF, Psi, Xi, Theta };

std::string_view map_name(MapName m);
MapName parse_map_name(std::string_view name);

/// Applies a named map; `alpha` selects FU or UF for MapName::Runs.
Path apply_map(MapName m, const Path& p, Relation alpha = Relation::FU);

}  // namespace lukas
