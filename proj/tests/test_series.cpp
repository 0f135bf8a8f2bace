#include <gtest/gtest.h>

#include "lukas/sequences.hpp"
#include "lukas/series.hpp"
#include "lukas/table1.hpp"
#include "support.hpp"

using namespace lukas;
namespace ts = testing_support;

namespace {

Series poly(int order, std::vector<std::int64_t> c) { return Series::from_integers(order, c); }

std::vector<std::int64_t> ints(const Series& s) {
  std::vector<std::int64_t> out;
  for (const auto& c : s.integers()) out.push_back(c.convert_to<std::int64_t>());
  return out;
}

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvariantViolation;
}

std::vector<Tag> all_tags() {
  std::vector<Tag> tags(kAllRelations.begin(), kAllRelations.end());
  for (auto s : {SetSeries::L, SetSeries::B, SetSeries::Bbar, SetSeries::C, SetSeries::Cbar,
                 SetSeries::E, SetSeries::Ebar}) {
    tags.push_back(s);
  }
  return tags;
}

}  // namespace

TEST(Series, Arithmetic) {
  const Series a = poly(4, {1, 1});
  const Series b = poly(4, {1, -1});
  EXPECT_EQ(ints(a * b), (std::vector<std::int64_t>{1, 0, -1, 0, 0}));
  EXPECT_EQ(ints(a + b), (std::vector<std::int64_t>{2, 0, 0, 0, 0}));
  EXPECT_EQ(ints(b.inverse()), (std::vector<std::int64_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(ints(a / a), (std::vector<std::int64_t>{1, 0, 0, 0, 0}));
  EXPECT_EQ((poly(6, {1, 2, 3}) * poly(3, {1})).order(), 3);
}

TEST(Series, ExactRationals) {
  const Series third = Series::constant(3, 3).inverse();
  EXPECT_EQ(third[0], Rational(1, 3));
  EXPECT_EQ(error_of([&] { third.integers(); }), Errc::NonIntegral);
}

TEST(Series, InverseNeedsUnit) {
  EXPECT_EQ(error_of([] { poly(3, {0, 1}).inverse(); }), Errc::NonUnitConstantTerm);
}

TEST(Series, ShiftDownNamesOffendingCoefficient) {
  const Series s = poly(5, {0, 0, 3, 4});
  EXPECT_EQ(ints(s.shift_down(2)), (std::vector<std::int64_t>{3, 4, 0, 0}));
  try {
    poly(5, {0, 1, 3}).shift_down(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
    EXPECT_EQ(e.value(), 1);
  }
  EXPECT_EQ(ints(poly(3, {1, 2}).shift_up(2)), (std::vector<std::int64_t>{0, 0, 1, 2}));
  EXPECT_EQ(s.valuation(), 2);
  EXPECT_EQ(Series(4).valuation(), 5);
}

TEST(Sqrt, Examples) {
  EXPECT_EQ(ints(series_sqrt(Series::constant(5, 1))), (std::vector<std::int64_t>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(ints(series_sqrt(poly(4, {1, -4}))), (std::vector<std::int64_t>{1, -2, -2, -4, -10}));
  EXPECT_EQ(ints(series_sqrt(poly(3, {1, -2, -3}))), (std::vector<std::int64_t>{1, -1, -2, -2}));
  EXPECT_EQ(error_of([] { series_sqrt(poly(3, {4, 1})); }), Errc::NonUnitConstantTerm);
}

TEST(Sqrt, SquaresBackToRadicand) {
  const std::vector<std::vector<std::int64_t>> radicands{
      {1, -4}, {1, 0, -2, 0, -3}, {1, -2, 1, -4}, {1, -2, -1, -2, 1}, {1, -2, -3}, {1, 3, 0, 7}};
  for (int order : {0, 1, 2, 7, 31, 64}) {
    for (const auto& c : radicands) {
      const Series u = poly(order, c);
      const Series r = series_sqrt(u);
      EXPECT_EQ(r * r, u) << order;
    }
  }
}

TEST(Closed, SpecExamples) {
  EXPECT_EQ(ints(expand_closed(Relation::FF, 10)),
            (std::vector<std::int64_t>{1, 1, 2, 2, 5, 9, 17, 32, 59, 107, 192}));
  EXPECT_EQ(ints(expand_closed(Relation::UkD, 10))[10], 978);
  EXPECT_EQ(ints(expand_closed(Relation::Uk, 10)),
            (std::vector<std::int64_t>{1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188}));
  std::vector<std::int64_t> catalan;
  for (int n = 0; n <= 30; ++n) catalan.push_back(static_cast<std::int64_t>(ts::catalan(n)));
  EXPECT_EQ(ints(expand_closed(SetSeries::L, 30)), catalan);
}

TEST(Closed, MissingForms) {
  for (Relation r : {Relation::U, Relation::UD, Relation::DU, Relation::F, Relation::D,
                     Relation::FD, Relation::DF}) {
    EXPECT_EQ(error_of([r] { expand_closed(r, 5); }), Errc::NoClosedForm) << relation_name(r);
  }
  EXPECT_EQ(error_of([] { expand_closed(SetSeries::Bbar, 5); }), Errc::NoClosedForm);
}

TEST(Recurrence, SpecExamples) {
  const auto f = ints(expand_recurrence(Relation::F, 5));
  EXPECT_EQ(std::vector<std::int64_t>(f.begin() + 1, f.end()),
            (std::vector<std::int64_t>{1, 2, 5, 12, 27}));
  const auto u = ints(expand_recurrence(Relation::DUk, 10));
  EXPECT_EQ(std::vector<std::int64_t>(u.begin() + 1, u.end()),
            (std::vector<std::int64_t>{1, 1, 1, 2, 4, 8, 17, 37, 82, 185}));
  EXPECT_EQ(ints(expand_recurrence(Relation::D, 1))[1], 1);
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(ints(expand_recurrence(Relation::U, 20))[n],
              static_cast<std::int64_t>(ts::binomial(n, n / 2)));
  }
  EXPECT_EQ(error_of([] { expand_recurrence(Relation::UU, 5); }), Errc::UnsupportedTag);
  EXPECT_EQ(error_of([] { expand_recurrence(Relation::FF, 5); }), Errc::UnsupportedTag);
}

TEST(Fixpoint, SpecExamples) {
  EXPECT_EQ(ints(solve_fixpoint(SetSeries::L, 6)),
            (std::vector<std::int64_t>{1, 1, 2, 5, 14, 42, 132}));
  EXPECT_EQ(ints(solve_fixpoint(SetSeries::B, 10)), ints(expand_closed(Relation::Uk, 10)));
  EXPECT_EQ(ints(solve_fixpoint(SetSeries::E, 10)), ints(expand_closed(Relation::UkF, 10)));
  EXPECT_EQ(ints(solve_fixpoint(SetSeries::L, 0)), (std::vector<std::int64_t>{1}));
}

TEST(Fixpoint, ResidualVanishes) {
  for (const Tag& t : all_tags()) {
    if (!std::ranges::count(available_methods(t), SeriesMethod::Fixpoint)) continue;
    for (int N : {0, 5, 20}) {
      EXPECT_GT(fixpoint_residual(t, N).valuation(), N) << tag_name(t);
    }
  }
}

TEST(Methods, AgreeForEveryTag) {
  for (const Tag& t : all_tags()) {
    const auto methods = available_methods(t);
    ASSERT_GE(methods.size(), 1u);
    const Series first = expand(t, methods.front(), 25);
    for (SeriesMethod m : methods) {
      EXPECT_EQ(expand(t, m, 25), first) << tag_name(t) << " " << series_method_name(m);
    }
    if (const auto* r = std::get_if<Relation>(&t)) {
      EXPECT_GE(methods.size(), 2u) << tag_name(t);
      for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(first[n], Rational(*table1_value(*r, n))) << tag_name(t) << " " << n;
      }
    }
  }
}

TEST(Methods, TruncationConsistency) {
  for (const Tag& t : all_tags()) {
    for (SeriesMethod m : available_methods(t)) {
      EXPECT_EQ(expand(t, m, 18).truncated(9), expand(t, m, 9))
          << tag_name(t) << " " << series_method_name(m);
    }
  }
}

TEST(Methods, SetSeriesMatchPathCounts) {
  for (const Tag& t : all_tags()) {
    const auto* s = std::get_if<SetSeries>(&t);
    if (!s) continue;
    const auto coef = ints(solve_fixpoint(t, 10));
    for (int n = 0; n <= 10; ++n) {
      EXPECT_EQ(static_cast<std::uint64_t>(coef[n]), count_paths_in_set(*s, n))
          << tag_name(t) << " " << n;
    }
  }
}

TEST(Compare, Examples) {
  const auto ff = compare(Relation::FF, 10);
  EXPECT_TRUE(ff.passed());
  const auto u0 = compare(Relation::U, 0);
  ASSERT_FALSE(u0.rows.empty());
  for (const auto& row : u0.rows) {
    EXPECT_EQ(row.n, 0);
    EXPECT_EQ(row.value, 1);
  }
  CompareOptions opts;
  opts.oracle_bound = 4;
  const auto uk = compare(Relation::Uk, 12, opts);
  EXPECT_TRUE(uk.passed());
  for (const auto& row : uk.rows) {
    if (row.method == "oracle") EXPECT_LE(row.n, 4);
  }
}

TEST(Compare, CsvAndJsonShapes) {
  const auto report = compare(Relation::D, 3);
  const std::string csv = verification_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,relation,method,value,reference,pass");
  const auto j = nlohmann::json::parse(verification_json(report).dump());
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["rows"].size(), report.rows.size());
}

TEST(Table1, Fixture) {
  EXPECT_EQ(table1_value(Relation::FF, 4), 5u);
  EXPECT_EQ(table1_value(Relation::UkD, 10), 978u);
  EXPECT_EQ(table1_value(Relation::D, 5), 16u);
  EXPECT_FALSE(table1_value(Relation::U, 0).has_value());
  EXPECT_FALSE(table1_value(Relation::U, 11).has_value());
}

TEST(Tags, Names) {
  for (const Tag& t : all_tags()) EXPECT_EQ(parse_tag(tag_name(t)), t);
  EXPECT_EQ(error_of([] { parse_tag("Z"); }), Errc::UnknownName);
  EXPECT_EQ(parse_series_method("fixpoint"), SeriesMethod::Fixpoint);
}
