#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library beyond the Relation enum and names.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "lukas/patterns.hpp"

namespace testing_support {

using Rises = std::vector<int>;

// Every rise sequence in {-1, ..., n-1}^n that stays >= 0 and ends at 0,
// found by a plain odometer over all n^n candidates.
inline std::vector<Rises> odometer_paths(int n) {
  std::vector<Rises> out;
  if (n == 0) return {Rises{}};
  Rises r(static_cast<std::size_t>(n), -1);
  while (true) {
    int h = 0;
    bool ok = true;
    for (int v : r) {
      h += v;
      if (h < 0) {
        ok = false;
        break;
      }
    }
    if (ok && h == 0) out.push_back(r);
    int i = n - 1;
    while (i >= 0 && r[i] == n - 1) r[i--] = -1;
    if (i < 0) break;
    ++r[i];
  }
  return out;
}

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline std::uint64_t motzkin(int n) {
  std::vector<std::uint64_t> m{1, 1};
  for (int k = 2; k <= n; ++k) {
    m.push_back(((2 * k + 1) * m[k - 1] + (3 * k - 3) * m[k - 2]) / (k + 2));
  }
  return m[static_cast<std::size_t>(n)];
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// (position, k) pairs, k = 0 for fixed patterns.
using RefSignature = std::vector<std::pair<int, int>>;

inline RefSignature reference_signature(const Rises& s, lukas::Relation r) {
  using R = lukas::Relation;
  RefSignature sig;
  const int n = static_cast<int>(s.size());
  auto at = [&](int i) { return i < n ? s[i] : -99; };
  for (int i = 0; i < n; ++i) {
    const int a = s[i];
    const int b = at(i + 1);
    bool hit = false;
    int k = 0;
    switch (r) {
      case R::U: hit = a == 1; break;
      case R::UU: hit = a == 1 && b == 1; break;
      case R::UD: hit = a == 1 && b == -1; break;
      case R::UF: hit = a == 1 && b == 0; break;
      case R::DU: hit = a == -1 && b == 1; break;
      case R::FU: hit = a == 0 && b == 1; break;
      case R::F: hit = a == 0; break;
      case R::D: hit = a == -1; break;
      case R::FD: hit = a == 0 && b == -1; break;
      case R::DF: hit = a == -1 && b == 0; break;
      case R::DD: hit = a == -1 && b == -1; break;
      case R::FF: hit = a == 0 && b == 0; break;
      case R::Uk: hit = a >= 1, k = a; break;
      case R::UkD: hit = a >= 1 && b == -1, k = a; break;
      case R::UkF: hit = a >= 1 && b == 0, k = a; break;
      case R::FUk: hit = a == 0 && b >= 1, k = b; break;
      case R::DUk: hit = a == -1 && b >= 1, k = b; break;
    }
    if (hit) sig.emplace_back(i + 1, k);
  }
  return sig;
}

inline std::uint64_t reference_class_count(const std::vector<Rises>& paths, lukas::Relation r) {
  std::set<RefSignature> seen;
  for (const auto& p : paths) seen.insert(reference_signature(p, r));
  return seen.size();
}

// Random path of length n: each step is drawn uniformly among the rises that
// still allow a return to the axis, with up steps capped at U_3.
inline Rises random_path(std::mt19937& rng, int n) {
  Rises r;
  int h = 0;
  for (int i = 0; i < n; ++i) {
    const int remaining = n - i;
    const int max_rise = remaining - 1 - h;  // room to come back down
    const int min_rise = h > 0 ? -1 : 0;
    if (max_rise < min_rise || remaining == h) {
      r.push_back(-1);
      --h;
      continue;
    }
    std::uniform_int_distribution<int> pick(min_rise, std::max(min_rise, std::min(max_rise, 3)));
    const int v = pick(rng);
    r.push_back(v);
    h += v;
  }
  return r;
}

}  // namespace testing_support
