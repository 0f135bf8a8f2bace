#include "lukas/path.hpp"

#include <cctype>
#include <charconv>

namespace lukas {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Lukasiewicz: return "Lukasiewicz";
    case Family::Motzkin: return "Motzkin";
    case Family::Dyck: return "Dyck";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Lukasiewicz, Family::Motzkin, Family::Dyck}) {
    if (name == family_name(f)) return f;
  }
  throw Error(Errc::UnknownName, "unknown path family '" + std::string(name) + "'");
}

std::string_view subset_name(Subset s) {
  switch (s) {
    case Subset::B: return "B";
    case Subset::Bbar: return "Bbar";
    case Subset::C: return "C";
    case Subset::Cbar: return "Cbar";
    case Subset::E: return "E";
    case Subset::Ebar: return "Ebar";
    case Subset::Fset: return "Fset";
  }
  return "?";
}

Subset parse_subset(std::string_view name) {
  for (Subset s : {Subset::B, Subset::Bbar, Subset::C, Subset::Cbar, Subset::E, Subset::Ebar,
                   Subset::Fset}) {
    if (name == subset_name(s)) return s;
  }
  throw Error(Errc::UnknownName, "unknown subset '" + std::string(name) + "'");
}

bool rise_in_family(int rise, Family f) noexcept {
  switch (f) {
    case Family::Lukasiewicz: return rise >= -1;
    case Family::Motzkin: return rise >= -1 && rise <= 1;
    case Family::Dyck: return rise == -1 || rise == 1;
  }
  return false;
}

Path Path::validate(std::span<const int> rises, Family family) {
  long long height = 0;
  for (std::size_t i = 0; i < rises.size(); ++i) {
    const auto position = static_cast<long long>(i + 1);
    if (!rise_in_family(rises[i], family)) {
      throw Error(Errc::StepOutsideFamily,
                  "step " + std::to_string(position) + " with rise " + std::to_string(rises[i]) +
                      " is not a " + std::string(family_name(family)) + " step",
                  position);
    }
    height += rises[i];
    if (height < 0) {
      throw Error(Errc::PrefixBelowAxis,
                  "path goes below the x-axis at step " + std::to_string(position), position);
    }
  }
  if (height != 0) {
    throw Error(Errc::NonzeroEndHeight, "path ends at ordinate " + std::to_string(height), height);
  }
  return Path(std::vector<int>(rises.begin(), rises.end()));
}

Path Path::parse(std::string_view text, Family family) {
  std::vector<int> rises;
  rises.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == 'D') {
      rises.push_back(kDown);
      ++i;
    } else if (c == 'F') {
      rises.push_back(kFlat);
      ++i;
    } else if (c == 'U') {
      ++i;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) {
        rises.push_back(kUp);
        continue;
      }
      int k = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, k);
      if (ec != std::errc() || ptr != text.data() + j || k < 2 || text[i] == '0') {
        throw Error(Errc::MalformedPath,
                    "bad up-step index '" + std::string(text.substr(i, j - i)) +
                        "' (U<k> needs k >= 2)",
                    static_cast<long long>(i));
      }
      rises.push_back(k);
      i = j;
    } else {
      throw Error(Errc::MalformedPath,
                  "unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i),
                  static_cast<long long>(i));
    }
  }
  return validate(rises, family);
}

std::string to_string(std::span<const int> rises) {
  std::string out;
  out.reserve(rises.size());
  for (int r : rises) {
    if (r == kDown) {
      out += 'D';
    } else if (r == kFlat) {
      out += 'F';
    } else if (r == kUp) {
      out += 'U';
    } else {
      out += 'U';
      out += std::to_string(r);
    }
  }
  return out;
}

std::string Path::str() const { return to_string(rises_); }

std::vector<int> Path::ordinates() const {
  std::vector<int> ys(rises_.size() + 1, 0);
  for (std::size_t i = 0; i < rises_.size(); ++i) ys[i + 1] = ys[i] + rises_[i];
  return ys;
}

bool Path::in_family(Family f) const noexcept {
  for (int r : rises_) {
    if (!rise_in_family(r, f)) return false;
  }
  return true;
}

Path operator+(const Path& a, const Path& b) {
  std::vector<int> rises;
  rises.reserve(a.size() + b.size());
  rises.insert(rises.end(), a.rises_.begin(), a.rises_.end());
  rises.insert(rises.end(), b.rises_.begin(), b.rises_.end());
  return Path(std::move(rises));
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int r : p) {
    h ^= static_cast<std::size_t>(r + 1);
    h *= 1099511628211ull;
  }
  return h;
}

PathEnumerator::PathEnumerator(int length, Family family) : length_(length), family_(family) {
  if (length < 0) throw Error(Errc::ResourceLimit, "negative path length", length);
}

std::vector<int> PathEnumerator::first_steps() const {
  std::vector<int> out;
  if (length_ == 0) return out;
  for (int r = 0; r <= length_ - 1; ++r) {
    if (rise_in_family(r, family_)) out.push_back(r);
  }
  return out;
}

void PathEnumerator::for_each(const Visitor& visit) const {
  Path current;
  current.rises_.reserve(static_cast<std::size_t>(length_));
  descend(current, 0, visit);
}

void PathEnumerator::for_each_with_first(int first_rise, const Visitor& visit) const {
  if (length_ == 0 || first_rise < 0 || first_rise > length_ - 1 ||
      !rise_in_family(first_rise, family_)) {
    return;
  }
  Path current;
  current.rises_.reserve(static_cast<std::size_t>(length_));
  current.rises_.push_back(first_rise);
  descend(current, first_rise, visit);
}

void PathEnumerator::descend(Path& current, int height, const Visitor& visit) const {
  const int remaining = length_ - current.length();
  if (remaining == 0) {
    visit(current);
    return;
  }
  // After this step, remaining - 1 steps must be able to come back down.
  const int max_rise = remaining - 1 - height;
  for (int r = -1; r <= max_rise; ++r) {
    if (height + r < 0 || !rise_in_family(r, family_)) continue;
    current.rises_.push_back(r);
    descend(current, height + r, visit);
    current.rises_.pop_back();
  }
}

std::vector<Path> enumerate_paths(int n, Family family) {
  std::vector<Path> out;
  PathEnumerator(n, family).for_each([&](const Path& p) { out.push_back(p); });
  return out;
}

namespace {

bool flats_only_on_axis(const Path& p) {
  int h = 0;
  for (int r : p) {
    if (r == kFlat && h > 0) return false;
    h += r;
  }
  return true;
}

bool has_flat(const Path& p) {
  for (int r : p) {
    if (r == kFlat) return true;
  }
  return false;
}

bool every_up_followed_by(const Path& p, int next) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_up(p[i]) && (i + 1 == p.size() || p[i + 1] != next)) return false;
  }
  return true;
}

bool in_e(const Path& p) {
  if (!every_up_followed_by(p, kFlat)) return false;
  int h = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == kFlat && h > 0 && (i == 0 || !is_up(p[i - 1]))) return false;
    h += p[i];
  }
  return true;
}

bool in_fset(const Path& p) {
  if (p.size() <= 1) return true;
  int ups = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_up(p[i])) ++ups;
    if (p[i] == kFlat) {
      const bool left = i > 0 && p[i - 1] == kFlat;
      const bool right = i + 1 < p.size() && p[i + 1] == kFlat;
      if (!left && !right) return false;
    }
  }
  return ups <= 1;
}

}  // namespace

bool in_subset(const Path& p, Subset s) {
  switch (s) {
    case Subset::B: return flats_only_on_axis(p);
    case Subset::Bbar: return !has_flat(p);
    case Subset::C: return flats_only_on_axis(p) && every_up_followed_by(p, kDown);
    case Subset::Cbar: return !has_flat(p) && every_up_followed_by(p, kDown);
    case Subset::E: return in_e(p);
    case Subset::Ebar: {
      if (!in_e(p)) return false;
      int h = 0;
      for (int r : p) {
        if (r == kFlat && h == 0) return false;
        h += r;
      }
      return true;
    }
    case Subset::Fset: return in_fset(p);
  }
  return false;
}

}  // namespace lukas
