#include "lukas/canonical.hpp"

#include <string>
#include <vector>

#include "lukas/quotient.hpp"

namespace lukas {

namespace {

using Rises = std::span<const int>;

void repeat(std::vector<int>& out, int rise, int count) {
  for (int i = 0; i < count; ++i) out.push_back(rise);
}

void invariant(bool ok, const char* what) {
  if (!ok) throw Error(Errc::InvariantViolation, what);
}

// For the up step at index `up`, the indices of the k down steps that close
// L_1, ..., L_k in the decomposition U_k L_1 D L_2 D ... L_k D.
std::vector<std::size_t> closing_downs(Rises s, std::size_t up) {
  const int k = s[up];
  std::vector<std::size_t> downs;
  downs.reserve(static_cast<std::size_t>(k));
  int height = k;
  int level = k;
  for (std::size_t j = up + 1; j < s.size() && level > 0; ++j) {
    height += s[j];
    if (height == level - 1) {
      downs.push_back(j);
      --level;
    }
  }
  return downs;
}

void phi_into(Rises s, std::size_t begin, std::size_t end, std::vector<int>& out) {
  std::size_t i = begin;
  while (i < end) {
    const int r = s[i];
    if (r == kFlat) {
      out.push_back(kFlat);
      ++i;
      continue;
    }
    const auto downs = closing_downs(s, i);
    if (r == kUp) {
      out.push_back(kUp);
      phi_into(s, i + 1, downs[0], out);
      out.push_back(kDown);
    } else {
      std::size_t start = i + 1;
      for (std::size_t d : downs) {
        out.push_back(kFlat);
        phi_into(s, start, d, out);
        start = d + 1;
      }
      out.push_back(kFlat);
    }
    i = downs.back() + 1;
  }
}

void psi_into(Rises s, std::size_t begin, std::size_t end, std::vector<int>& out) {
  std::size_t i = begin;
  while (i < end) {
    const int r = s[i];
    if (r == kFlat) {
      out.push_back(kFlat);
      ++i;
      continue;
    }
    const auto downs = closing_downs(s, i);
    out.push_back(kUp);
    std::size_t start = i + 1;
    for (std::size_t j = 0; j < downs.size(); ++j) {
      psi_into(s, start, downs[j], out);
      out.push_back(j + 1 < downs.size() ? kFlat : kDown);
      start = downs[j] + 1;
    }
    i = downs.back() + 1;
  }
}

// L = K_0 (alpha^{a_1}) K_1 ... (alpha^{a_r}) K_r for a fixed two-step
// pattern alpha whose occurrences cannot overlap.
struct Runs {
  int head = 0;                             // |K_0|
  std::vector<std::pair<int, int>> blocks;  // (a_i, |K_i|)
};

Runs decompose_runs(Rises s, int first, int second) {
  Runs runs;
  const std::size_t n = s.size();
  auto match = [&](std::size_t i) { return i + 1 < n && s[i] == first && s[i + 1] == second; };
  std::size_t i = 0;
  while (i < n && !match(i)) ++i;
  runs.head = static_cast<int>(i);
  while (i < n) {
    int a = 0;
    while (match(i)) {
      ++a;
      i += 2;
    }
    const std::size_t gap_start = i;
    while (i < n && !match(i)) ++i;
    runs.blocks.emplace_back(a, static_cast<int>(i - gap_start));
  }
  return runs;
}

// L = K_0 (X_1 K_1) ... (X_r K_r) where each X_i starts with an up step U_{k_i}
// and is selected by `head_length(i)` (0 when no X starts at i).
struct Blocks {
  int head = 0;
  std::vector<std::pair<int, int>> blocks;  // (k_i, |K_i|)
};

template <class HeadLength>
Blocks decompose_blocks(Rises s, HeadLength head_length) {
  Blocks out;
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n && head_length(i) == 0) ++i;
  out.head = static_cast<int>(i);
  while (i < n) {
    const int k = s[i];
    i += static_cast<std::size_t>(head_length(i));
    const std::size_t gap_start = i;
    while (i < n && head_length(i) == 0) ++i;
    out.blocks.emplace_back(k, static_cast<int>(i - gap_start));
  }
  return out;
}

// Shared body of to_b / to_c / to_e: K_0 -> F^{b_0}, each block head kept,
// K_i -> D^{c_i} F^{b_i - c_i} with c_i the largest drop that stays >= 0.
Path rebuild_greedy(const Blocks& blocks, int height_gain_offset,
                    std::span<const int> head_tail) {
  std::vector<int> out;
  repeat(out, kFlat, blocks.head);
  int height = 0;
  for (const auto& [k, gap] : blocks.blocks) {
    out.push_back(k);
    out.insert(out.end(), head_tail.begin(), head_tail.end());
    height += k + height_gain_offset;
    const int drop = std::min(gap, height);
    repeat(out, kDown, drop);
    repeat(out, kFlat, gap - drop);
    height -= drop;
  }
  invariant(height == 0, "greedy projection did not return to the axis");
  return Path::validate(out);
}

Path flats(int n) {
  std::vector<int> out(static_cast<std::size_t>(n), kFlat);
  return Path::validate(out);
}

void require_position_set(int n, std::span<const int> positions, Relation pattern) {
  if (n < 0 || !is_valid_position_set(n, pattern, positions)) {
    throw Error(Errc::InvalidPositionSet,
                "not a valid " + std::string(relation_name(pattern)) +
                    " position set for length " + std::to_string(n),
                n);
  }
}

std::pair<int, int> two_step(Relation alpha) {
  switch (alpha) {
    case Relation::FU: return {kFlat, kUp};
    case Relation::UF: return {kUp, kFlat};
    case Relation::DU: return {kDown, kUp};
    case Relation::FD: return {kFlat, kDown};
    case Relation::DF: return {kDown, kFlat};
    default:
      throw Error(Errc::UnsupportedPattern,
                  "unsupported pattern " + std::string(relation_name(alpha)));
  }
}

}  // namespace

Path phi(const Path& p) {
  std::vector<int> out;
  out.reserve(p.size());
  phi_into(p.rises(), 0, p.size(), out);
  return Path::validate(out, Family::Motzkin);
}

Path psi(const Path& p) {
  std::vector<int> out;
  out.reserve(p.size());
  psi_into(p.rises(), 0, p.size(), out);
  return Path::validate(out, Family::Motzkin);
}

Path motzkinize_du(const Path& p) {
  const Runs runs = decompose_runs(p.rises(), kDown, kUp);
  if (runs.blocks.empty()) return flats(p.length());
  // A path cannot start with D nor end with U, so K_0 and K_r are non-empty.
  invariant(runs.head >= 1, "DU decomposition: empty K_0");
  invariant(runs.blocks.back().second >= 1, "DU decomposition: empty K_r");

  std::vector<int> out;
  out.push_back(kUp);
  repeat(out, kFlat, runs.head - 1);
  for (std::size_t i = 0; i < runs.blocks.size(); ++i) {
    const auto [a, gap] = runs.blocks[i];
    for (int j = 0; j < a; ++j) {
      out.push_back(kDown);
      out.push_back(kUp);
    }
    if (i + 1 < runs.blocks.size()) {
      repeat(out, kFlat, gap);
    } else {
      out.push_back(kDown);
      repeat(out, kFlat, gap - 1);
    }
  }
  return Path::validate(out, Family::Motzkin);
}

Path motzkinize_runs(const Path& p, Relation alpha) {
  if (alpha != Relation::FU && alpha != Relation::UF) {
    throw Error(Errc::UnsupportedPattern, "motzkinize_runs expects FU or UF");
  }
  const auto [first, second] = two_step(alpha);
  const Runs runs = decompose_runs(p.rises(), first, second);
  std::vector<int> out;
  repeat(out, kFlat, runs.head);
  int height = 0;
  for (const auto& [a, gap] : runs.blocks) {
    for (int j = 0; j < a; ++j) {
      out.push_back(first);
      out.push_back(second);
    }
    height += a;
    const int drop = std::min(gap, height);
    repeat(out, kDown, drop);
    repeat(out, kFlat, gap - drop);
    height -= drop;
  }
  invariant(height == 0, "run Motzkinization did not return to the axis");
  return Path::validate(out, Family::Motzkin);
}

Path motzkin_representative(const Path& p, Relation r) {
  if (r != Relation::U && r != Relation::UU && r != Relation::UD) {
    throw Error(Errc::UnsupportedPattern, "motzkin_representative expects U, UU or UD");
  }
  const std::size_t n = p.size();
  std::vector<int> forced(n, kFlat);
  std::vector<bool> fixed(n, false);
  for (int pos : positions(occurrences(p, r))) {
    const auto i = static_cast<std::size_t>(pos - 1);
    forced[i] = kUp;
    fixed[i] = true;
    if (r != Relation::U) {
      forced[i + 1] = r == Relation::UU ? kUp : kDown;
      fixed[i + 1] = true;
    }
  }
  std::vector<int> out;
  out.reserve(n);
  int height = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int step = fixed[i] ? forced[i] : (height > 0 ? kDown : kFlat);
    out.push_back(step);
    height += step;
  }
  return Path::validate(out, Family::Motzkin);
}

Path to_b(const Path& p) {
  const auto s = p.rises();
  const auto blocks = decompose_blocks(s, [&](std::size_t i) { return is_up(s[i]) ? 1 : 0; });
  return rebuild_greedy(blocks, 0, {});
}

Path to_c(const Path& p) {
  const auto s = p.rises();
  const auto blocks = decompose_blocks(s, [&](std::size_t i) {
    return is_up(s[i]) && i + 1 < s.size() && s[i + 1] == kDown ? 2 : 0;
  });
  static constexpr int tail[] = {kDown};
  return rebuild_greedy(blocks, -1, tail);
}

Path to_e(const Path& p) {
  const auto s = p.rises();
  const auto blocks = decompose_blocks(s, [&](std::size_t i) {
    return is_up(s[i]) && i + 1 < s.size() && s[i + 1] == kFlat ? 2 : 0;
  });
  static constexpr int tail[] = {kFlat};
  return rebuild_greedy(blocks, 0, tail);
}

Path to_f(const Path& p) {
  const auto s = p.rises();
  const std::size_t n = s.size();

  // L = K_1 F^{a_1} K_2 ... K_r F^{a_r} K_{r+1}, with a_i >= 2 the maximal
  // flat runs of length at least two.
  std::vector<int> k_lengths{0};
  std::vector<int> runs;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && s[j] == kFlat) ++j;
    const int run = static_cast<int>(j - i);
    if (run >= 2) {
      runs.push_back(run);
      k_lengths.push_back(0);
      i = j;
    } else {
      ++k_lengths.back();
      ++i;
    }
  }
  if (runs.size() == 1 && k_lengths.front() == 0 && k_lengths.back() == 0) return p;  // F^n
  if (n <= 1) return p;

  std::vector<int> out;
  out.reserve(n);
  std::size_t first_k = 0;
  if (k_lengths.front() == 0) {
    // Case (2): the path starts with a flat run; the up step follows it.
    repeat(out, kFlat, runs.front());
    first_k = 1;
  }
  int downs = k_lengths[first_k] - 1;
  for (std::size_t j = first_k + 1; j < k_lengths.size(); ++j) downs += k_lengths[j];
  invariant(k_lengths[first_k] >= 1 && downs >= 1, "FF projection: degenerate block");
  out.push_back(downs);
  repeat(out, kDown, k_lengths[first_k] - 1);
  for (std::size_t j = first_k; j < runs.size(); ++j) {
    repeat(out, kFlat, runs[j]);
    repeat(out, kDown, k_lengths[j + 1]);
  }
  return Path::validate(out);
}

Path witness_f(int n, std::span<const int> positions) {
  require_position_set(n, positions, Relation::F);
  const int rest = n - static_cast<int>(positions.size());
  std::vector<int> scaffold;
  if (rest % 2 == 1) {
    scaffold = {2, kDown, kDown};
    for (int j = 0; j < (rest - 3) / 2; ++j) {
      scaffold.push_back(kUp);
      scaffold.push_back(kDown);
    }
  } else {
    for (int j = 0; j < rest / 2; ++j) {
      scaffold.push_back(kUp);
      scaffold.push_back(kDown);
    }
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  std::size_t next_flat = 0;
  std::size_t next_step = 0;
  for (int i = 1; i <= n; ++i) {
    if (next_flat < positions.size() && positions[next_flat] == i) {
      out.push_back(kFlat);
      ++next_flat;
    } else {
      out.push_back(scaffold[next_step++]);
    }
  }
  return Path::validate(out);
}

Path witness_d(int n, std::span<const int> positions) {
  require_position_set(n, positions, Relation::D);
  if (n == 0) return Path();
  const int ell = static_cast<int>(positions.size());
  const int first = ell == 0 ? n + 1 : positions.front();
  std::vector<int> out{ell};
  repeat(out, kFlat, first - 2);
  for (int j = 0; j < ell; ++j) {
    const int next = j + 1 < ell ? positions[j + 1] : n + 1;
    out.push_back(kDown);
    repeat(out, kFlat, next - positions[j] - 1);
  }
  return Path::validate(out);
}

Path witness_adj(int n, std::span<const int> positions, Relation pattern) {
  if (pattern != Relation::FD && pattern != Relation::DF) {
    throw Error(Errc::UnsupportedPattern, "witness_adj expects FD or DF");
  }
  require_position_set(n, positions, pattern);
  if (n == 0) return Path();
  const auto [a, b] = two_step(pattern);
  const int ell = static_cast<int>(positions.size());
  const int first = ell == 0 ? n + 1 : positions.front();
  std::vector<int> out{ell};
  repeat(out, kFlat, first - 2);
  for (int j = 0; j < ell; ++j) {
    const int next = j + 1 < ell ? positions[j + 1] : n + 1;
    out.push_back(a);
    out.push_back(b);
    repeat(out, kFlat, next - positions[j] - 2);
  }
  return Path::validate(out);
}

Path witness_dd(int n, std::span<const int> positions) {
  require_position_set(n, positions, Relation::DD);
  if (n == 0) return Path();
  // Every chosen position and its successor carry a D; the first step
  // balances them and every other step is flat.
  std::vector<int> out(static_cast<std::size_t>(n), kFlat);
  int downs = 0;
  for (int i : positions) {
    for (int q : {i, i + 1}) {
      auto& step = out[static_cast<std::size_t>(q - 1)];
      if (step != kDown) {
        step = kDown;
        ++downs;
      }
    }
  }
  out[0] = downs;
  return Path::validate(out);
}

Path witness(int n, std::span<const int> positions, Relation pattern) {
  switch (pattern) {
    case Relation::F: return witness_f(n, positions);
    case Relation::D: return witness_d(n, positions);
    case Relation::FD:
    case Relation::DF: return witness_adj(n, positions, pattern);
    case Relation::DD: return witness_dd(n, positions);
    default:
      throw Error(Errc::UnsupportedPattern,
                  "no witness construction for " + std::string(relation_name(pattern)));
  }
}

Path xi(const Path& p) {
  const auto s = p.rises();
  std::vector<int> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_up(s[i]) && i + 1 < s.size() && s[i + 1] == kFlat) {
      out.push_back(kFlat);
      out.push_back(s[i]);
      ++i;
    } else {
      out.push_back(s[i]);
    }
  }
  return Path::validate(out);
}

Path theta(const Path& p) {
  const auto s = p.rises();
  std::vector<int> out;
  out.reserve(s.size() + 2);
  out.push_back(kUp);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_up(s[i]) && i + 1 < s.size() && s[i + 1] == kDown) {
      out.push_back(kDown);
      out.push_back(s[i]);
      ++i;
    } else {
      out.push_back(s[i]);
    }
  }
  out.push_back(kDown);
  return Path::validate(out);
}

std::string_view target_name(Target t) {
  switch (t) {
    case Target::Motzkin: return "Motzkin";
    case Target::B: return "B";
    case Target::C: return "C";
    case Target::E: return "E";
    case Target::Fset: return "Fset";
    case Target::Witness: return "witness";
  }
  return "?";
}

CanonicalForm canonical_form(const Path& p, Relation r) {
  switch (r) {
    case Relation::U:
    case Relation::UU:
    case Relation::UD: return {motzkin_representative(p, r), r, Target::Motzkin};
    case Relation::DU: return {motzkinize_du(p), r, Target::Motzkin};
    case Relation::UF:
    case Relation::FU: return {motzkinize_runs(p, r), r, Target::Motzkin};
    case Relation::Uk: return {to_b(p), r, Target::B};
    case Relation::UkD: return {to_c(p), r, Target::C};
    case Relation::UkF: return {to_e(p), r, Target::E};
    case Relation::FF: return {to_f(p), r, Target::Fset};
    case Relation::F:
    case Relation::D:
    case Relation::FD:
    case Relation::DF:
    case Relation::DD:
      return {witness(p.length(), positions(occurrences(p, r)), r), r, Target::Witness};
    case Relation::FUk:
    case Relation::DUk: break;
  }
  throw Error(Errc::UnsupportedPattern,
              "no representative construction for " + std::string(relation_name(r)));
}

namespace {
constexpr std::pair<MapName, std::string_view> kMapNames[] = {
    {MapName::Phi, "phi"}, {MapName::Du, "du"},   {MapName::Runs, "runs"}, {MapName::ToB, "toB"},
    {MapName::ToC, "toC"}, {MapName::ToE, "toE"}, {MapName::ToF, "toF"},   {MapName::Psi, "psi"},
    {MapName::Xi, "xi"},   {MapName::Theta, "theta"}};
}  // namespace

std::string_view map_name(MapName m) {
  for (const auto& [value, name] : kMapNames) {
    if (value == m) return name;
  }
  return "?";
}

MapName parse_map_name(std::string_view name) {
  for (const auto& [value, text] : kMapNames) {
    if (text == name) return value;
  }
  throw Error(Errc::UnknownName, "unknown map '" + std::string(name) + "'");
}

Path apply_map(MapName m, const Path& p, Relation alpha) {
  switch (m) {
    case MapName::Phi: return phi(p);
    case MapName::Du: return motzkinize_du(p);
    case MapName::Runs: return motzkinize_runs(p, alpha);
    case MapName::ToB: return to_b(p);
    case MapName::ToC: return to_c(p);
    case MapName::ToE: return to_e(p);
    case MapName::ToF: return to_f(p);
    case MapName::Psi: return psi(p);
    case MapName::Xi: return xi(p);
    case MapName::Theta: return theta(p);
  }
  return p;
}

}  // namespace lukas
