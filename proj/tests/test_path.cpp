#include <gtest/gtest.h>

#include <set>

#include "lukas/path.hpp"
#include "support.hpp"

using namespace lukas;
namespace ts = testing_support;

namespace {

Errc error_of(const std::function<void()>& f, long long* value = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (value) *value = e.value();
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvariantViolation;
}

}  // namespace

TEST(Path, EmptyIsValid) {
  const Path p = Path::validate({});
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p.str(), "");
  EXPECT_EQ(Path::parse(""), p);
}

TEST(Path, FigureOnePath) {
  const Path c = Path::validate({5, -1, -1, 0, 0, -1, 2, -1, -1, -1, -1, 2, 0, 2, -1, -1, -1, -1});
  EXPECT_EQ(c.length(), 18);
  EXPECT_EQ(c.str(), "U5DDFFDU2DDDDU2FU2DDDD");
  EXPECT_EQ(Path::parse("U5DDFFDU2DDDDU2FU2DDDD"), c);
}

TEST(Path, ValidationErrors) {
  long long v = 0;
  EXPECT_EQ(error_of([] { Path::validate({-1, 1}); }, &v), Errc::PrefixBelowAxis);
  EXPECT_EQ(v, 1);
  EXPECT_EQ(error_of([] { Path::validate({1, -1, -1, 1}); }, &v), Errc::PrefixBelowAxis);
  EXPECT_EQ(v, 3);
  EXPECT_EQ(error_of([] { Path::validate({2, -1}); }, &v), Errc::NonzeroEndHeight);
  EXPECT_EQ(v, 1);
  EXPECT_EQ(error_of([] { Path::validate({-2, 2}); }), Errc::StepOutsideFamily);
  EXPECT_EQ(error_of([] { Path::validate({2, -1, -1}, Family::Motzkin); }, &v),
            Errc::StepOutsideFamily);
  EXPECT_EQ(v, 1);
  EXPECT_EQ(error_of([] { Path::validate({1, 0, -1}, Family::Dyck); }, &v),
            Errc::StepOutsideFamily);
  EXPECT_EQ(v, 2);
}

TEST(Path, ParseRejectsMalformedText) {
  for (const char* bad : {"U1D", "U0F", "X", "U2", "u", "U 2DD", "U-1", "UD ", "U02DD"}) {
    SCOPED_TRACE(bad);
    try {
      Path::parse(bad);
      ADD_FAILURE() << "accepted";
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == Errc::MalformedPath || e.code() == Errc::NonzeroEndHeight)
          << errc_name(e.code());
    }
  }
  EXPECT_EQ(error_of([] { Path::parse("U1D"); }), Errc::MalformedPath);
  EXPECT_EQ(error_of([] { Path::parse("DU"); }), Errc::PrefixBelowAxis);
}

TEST(Path, RoundTripsLargeRises) {
  const Path p = Path::parse("U12DDDDDDDDDDDD");
  EXPECT_EQ(p[0], 12);
  EXPECT_EQ(p.str(), "U12DDDDDDDDDDDD");
}

TEST(Path, OrdinatesAndConcatenation) {
  const Path a = Path::parse("U2DFD");
  EXPECT_EQ(a.ordinates(), (std::vector<int>{0, 2, 1, 1, 0}));
  const Path b = Path::parse("UD");
  EXPECT_EQ((a + b).str(), "U2DFDUD");
}

TEST(Enumerate, LengthThreeInOrder) {
  std::vector<std::string> got;
  for (const auto& p : enumerate_paths(3)) got.push_back(p.str());
  EXPECT_EQ(got, (std::vector<std::string>{"FFF", "FUD", "UDF", "UFD", "U2DD"}));
}

TEST(Enumerate, EmptyLength) {
  for (Family f : {Family::Lukasiewicz, Family::Motzkin, Family::Dyck}) {
    const auto paths = enumerate_paths(0, f);
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_TRUE(paths.front().empty());
  }
}

TEST(Enumerate, MatchesOdometerOracle) {
  for (int n = 0; n <= 7; ++n) {
    SCOPED_TRACE(n);
    const auto expected = ts::odometer_paths(n);  // lexicographic by construction
    const auto got = enumerate_paths(n);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(std::vector<int>(got[i].begin(), got[i].end()), expected[i]);
    }
  }
}

TEST(Enumerate, FamilyCounts) {
  for (int n = 0; n <= 13; ++n) {
    SCOPED_TRACE(n);
    std::uint64_t luk = 0, motz = 0, dyck = 0;
    PathEnumerator(n, Family::Lukasiewicz).for_each([&](const Path&) { ++luk; });
    PathEnumerator(n, Family::Motzkin).for_each([&](const Path&) { ++motz; });
    PathEnumerator(n, Family::Dyck).for_each([&](const Path&) { ++dyck; });
    EXPECT_EQ(luk, ts::catalan(n));
    EXPECT_EQ(motz, ts::motzkin(n));
    EXPECT_EQ(dyck, n % 2 ? 0 : ts::catalan(n / 2));
  }
}

TEST(Enumerate, PartitionsCoverEverythingOnce) {
  const int n = 9;
  PathEnumerator e(n, Family::Lukasiewicz);
  std::set<Path> seen;
  std::size_t total = 0;
  for (int first : e.first_steps()) {
    e.for_each_with_first(first, [&](const Path& p) {
      EXPECT_EQ(p[0], first);
      seen.insert(p);
      ++total;
    });
  }
  EXPECT_EQ(total, ts::catalan(n));
  EXPECT_EQ(seen.size(), total);
}

TEST(Subset, PublishedExamples) {
  EXPECT_TRUE(in_subset(Path::parse("U3DDDFUD"), Subset::B));
  EXPECT_FALSE(in_subset(Path::parse("U3FDDDUD"), Subset::B));
  EXPECT_FALSE(in_subset(Path::parse("U3DDDFUFD"), Subset::E));
  // The flat at position 5 sits at height 1 outside any U_kF occurrence.
  EXPECT_FALSE(in_subset(Path::parse("U3FDDFDUD"), Subset::E));
  EXPECT_TRUE(in_subset(Path::parse("U3FDDDFUFD"), Subset::E));
}

TEST(Subset, HandPicked) {
  EXPECT_TRUE(in_subset(Path::parse("U2DDUD"), Subset::Bbar));
  EXPECT_FALSE(in_subset(Path::parse("FUD"), Subset::Bbar));
  EXPECT_TRUE(in_subset(Path::parse("FU2DDUD"), Subset::C));
  EXPECT_FALSE(in_subset(Path::parse("UUDD"), Subset::C));
  EXPECT_FALSE(in_subset(Path::parse("FUD"), Subset::Cbar));
  EXPECT_TRUE(in_subset(Path::parse("FUFD"), Subset::E));
  EXPECT_FALSE(in_subset(Path::parse("FUFD"), Subset::Ebar));
  EXPECT_FALSE(in_subset(Path::parse("UFFD"), Subset::E));
  EXPECT_TRUE(in_subset(Path::parse("F"), Subset::Fset));
  EXPECT_TRUE(in_subset(Path::parse("FFU2DFFD"), Subset::Fset));
  EXPECT_FALSE(in_subset(Path::parse("UDUD"), Subset::Fset));
  EXPECT_FALSE(in_subset(Path::parse("U2DFD"), Subset::Fset));
}

TEST(Subset, ContainmentsAndMotzkinCount) {
  for (int n = 0; n <= 11; ++n) {
    SCOPED_TRACE(n);
    std::uint64_t b = 0;
    PathEnumerator(n, Family::Lukasiewicz).for_each([&](const Path& p) {
      const bool in_b = in_subset(p, Subset::B);
      const bool in_c = in_subset(p, Subset::C);
      b += in_b;
      if (in_c) EXPECT_TRUE(in_b) << p.str();
      if (in_subset(p, Subset::Cbar)) EXPECT_TRUE(in_c) << p.str();
      if (in_subset(p, Subset::Bbar)) EXPECT_TRUE(in_b) << p.str();
      if (in_subset(p, Subset::Ebar)) EXPECT_TRUE(in_subset(p, Subset::E)) << p.str();
    });
    EXPECT_EQ(b, ts::motzkin(n));
  }
}

TEST(Names, RoundTrip) {
  for (Family f : {Family::Lukasiewicz, Family::Motzkin, Family::Dyck}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  for (Subset s : {Subset::B, Subset::Bbar, Subset::C, Subset::Cbar, Subset::E, Subset::Ebar,
                   Subset::Fset}) {
    EXPECT_EQ(parse_subset(subset_name(s)), s);
  }
  EXPECT_EQ(error_of([] { parse_subset("Q"); }), Errc::UnknownName);
}

TEST(Property, RandomPathsRoundTripThroughText) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = static_cast<int>(rng() % 25);
    const auto rises = ts::random_path(rng, n);
    const Path p = Path::validate(rises);
    EXPECT_EQ(Path::parse(p.str()), p);
  }
}
