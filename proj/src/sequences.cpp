#include "lukas/sequences.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <sstream>

#include "lukas/path.hpp"
#include "lukas/quotient.hpp"
#include "lukas/table1.hpp"

namespace lukas {

namespace {

constexpr std::pair<SetSeries, std::string_view> kSetNames[] = {
    {SetSeries::L, "L"},       {SetSeries::B, "B"}, {SetSeries::Bbar, "Bbar"},
    {SetSeries::C, "C"},       {SetSeries::Cbar, "Cbar"}, {SetSeries::E, "E"},
    {SetSeries::Ebar, "Ebar"}};

// Closed forms are evaluated a few degrees past N so that divisions by x^m
// still leave N + 1 exact coefficients.
constexpr int kClosedSlack = 3;

Series poly(int order, std::initializer_list<std::int64_t> c) {
  return Series::from_integers(order, std::vector<std::int64_t>(c));
}

Series x_series(int order) { return Series::monomial(order, 1); }

Series geometric(const Series& t) { return (Rational(1) - t).inverse(); }

Series from_big(int order, const std::vector<BigInt>& values) {
  std::vector<Rational> c(values.begin(), values.end());
  return Series(order, std::move(c));
}

[[noreturn]] void no_closed_form(const Tag& t) {
  throw Error(Errc::NoClosedForm, "no closed form for " + std::string(tag_name(t)));
}

[[noreturn]] void unsupported(const Tag& t, std::string_view method) {
  throw Error(Errc::UnsupportedTag,
              "no " + std::string(method) + " for " + std::string(tag_name(t)));
}

// ---- closed forms ---------------------------------------------------------

Series catalan_closed(int m) {
  const Series root = series_sqrt(poly(m, {1, -4}));
  return ((Rational(1) - root).shift_down(1) * Rational(1, 2));
}

Series motzkin_closed(int m) {
  const Series root = series_sqrt(poly(m, {1, -2, -3}));
  return ((poly(m, {1, -1}) - root).shift_down(2) * Rational(1, 2));
}

Series closed_at(const Tag& t, int m) {
  if (const auto* set = std::get_if<SetSeries>(&t)) {
    switch (*set) {
      case SetSeries::L: return catalan_closed(m);
      case SetSeries::B: return motzkin_closed(m);
      case SetSeries::C: return closed_at(Relation::UkD, m);
      case SetSeries::E: return closed_at(Relation::UkF, m);
      default: no_closed_form(t);
    }
  }
  switch (std::get<Relation>(t)) {
    case Relation::UU: {
      const Series root = series_sqrt(poly(m, {1, 0, -2, 0, -3}));  // (x^2+1)(1-3x^2)
      const Series num = (poly(m, {1, -2, 1}) - root).shift_down(1);
      return num / (poly(m, {-1, 2, -1, 1}) * Rational(2));
    }
    case Relation::UF:
    case Relation::FU: {
      const Series root = series_sqrt(poly(m, {1, 0, 0, -4}));
      return Series::constant(m, 2) / (poly(m, {1, -2}) + root);
    }
    case Relation::DD: return poly(m, {1, -1}) / poly(m, {1, -2, 1, -1});
    case Relation::FF:
      return poly(m, {1, -3, 4, -5, 7, -7, 6, -3, 1}) /
             (poly(m, {1, -2, 1, -1}) * poly(m, {1, -2, 1}));
    case Relation::Uk: return motzkin_closed(m);
    case Relation::UkF:
    case Relation::FUk: {
      const Series s = series_sqrt(poly(m, {1, -2, 1, -4}));
      return (poly(m, {1, -1, 2}) + s) / (poly(m, {1, -2, 2, -3}) + poly(m, {1, -1, 1}) * s);
    }
    case Relation::UkD:
    case Relation::DUk: {
      const Series r = series_sqrt(poly(m, {1, -2, -1, -2, 1}));
      const Series den = poly(m, {1, -2, 0, -1}) + poly(m, {1, -1}) * r;
      const Series num = std::get<Relation>(t) == Relation::UkD ? poly(m, {1, -1, 1}) + r
                                                                 : poly(m, {1, -1, -1, -2}) + r;
      return num / den;
    }
    default: no_closed_form(t);
  }
}

// ---- recurrences ----------------------------------------------------------

using Terms = std::vector<BigInt>;

Terms catalan_terms(int N) {
  Terms c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;
  for (int n = 1; n <= N; ++n) {
    BigInt s = 0;
    for (int k = 0; k < n; ++k) s += c[k] * c[n - 1 - k];
    c[n] = s;
  }
  return c;
}

Terms motzkin_terms(int N) {
  Terms m(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    if (n < 2) {
      m[n] = 1;
      continue;
    }
    BigInt s = m[n - 1];
    for (int k = 0; k <= n - 2; ++k) s += m[k] * m[n - 2 - k];
    m[n] = s;
  }
  return m;
}

// binomial(n, floor(n/2)) from successive Pascal rows.
Terms central_binomial_terms(int N) {
  Terms out;
  std::vector<BigInt> row{1};
  for (int n = 0; n <= N; ++n) {
    out.push_back(row[static_cast<std::size_t>(n / 2)]);
    std::vector<BigInt> next(row.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  return out;
}

// a_n = sum_j weights[j] a_{n-1-j} after the given initial terms.
Terms linear_terms(int N, std::initializer_list<int> initial, std::initializer_list<int> weights) {
  Terms a;
  for (int v : initial) a.emplace_back(v);
  while (static_cast<int>(a.size()) <= N) {
    BigInt s = 0;
    int j = 0;
    for (int w : weights) {
      const int idx = static_cast<int>(a.size()) - 1 - j;
      if (w != 0 && idx >= 0) s += a[idx] * w;
      ++j;
    }
    a.push_back(s);
  }
  a.resize(static_cast<std::size_t>(N) + 1);
  return a;
}

// g_0 = 1, g_{n+1} = g_n + sum_{k=1}^{n-1} g_k g_{n-1-k}
Terms a004148_terms(int N) {
  Terms g(static_cast<std::size_t>(N) + 1);
  g[0] = 1;
  for (int n = 0; n + 1 <= N; ++n) {
    BigInt s = g[n];
    for (int k = 1; k <= n - 1; ++k) s += g[k] * g[n - 1 - k];
    g[n + 1] = s;
  }
  return g;
}

// U_kD class counts: c_n = g_{n+1}.
Terms ukd_terms(int N) {
  const Terms g = a004148_terms(N + 1);
  return Terms(g.begin() + 1, g.end());
}

// h_0 = 1, h_{n+1} = h_n + sum_{k=0}^{n-2} h_k h_{n-2-k}
Terms ukf_terms(int N) {
  Terms h(static_cast<std::size_t>(N) + 1);
  h[0] = 1;
  for (int n = 0; n + 1 <= N; ++n) {
    BigInt s = h[n];
    for (int k = 0; k <= n - 2; ++k) s += h[k] * h[n - 2 - k];
    h[n + 1] = s;
  }
  return h;
}

Terms recurrence_terms(const Tag& t, int N) {
  if (const auto* set = std::get_if<SetSeries>(&t)) {
    switch (*set) {
      case SetSeries::L: return catalan_terms(N);
      case SetSeries::B: return motzkin_terms(N);
      case SetSeries::C: return ukd_terms(N);
      case SetSeries::E: return ukf_terms(N);
      default: unsupported(t, "recurrence");
    }
  }
  Terms a;
  switch (std::get<Relation>(t)) {
    case Relation::U: return central_binomial_terms(N);
    case Relation::UD: return linear_terms(N, {1, 1}, {1, 1});
    case Relation::DU: return linear_terms(N, {1, 1, 1, 1}, {1, 1});
    case Relation::F:
      // 2^n - n, except a_0 = 1
      for (int n = 0; n <= N; ++n) a.push_back(n == 0 ? BigInt(1) : (BigInt(1) << n) - n);
      return a;
    case Relation::D:
      for (int n = 0; n <= N; ++n) a.push_back(n == 0 ? BigInt(1) : BigInt(1) << (n - 1));
      return a;
    case Relation::FD:
    case Relation::DF: return linear_terms(N, {1, 1, 1}, {1, 1});
    case Relation::DD: return linear_terms(N, {1, 1, 1, 2}, {1, 1, 0, 1});
    case Relation::Uk: return motzkin_terms(N);
    case Relation::UkD: return ukd_terms(N);
    case Relation::UkF:
    case Relation::FUk: return ukf_terms(N);
    case Relation::DUk: {
      // u_0 = u_1 = u_2 = 1, u_n = c_{n-2}
      const Terms c = ukd_terms(std::max(0, N - 2));
      for (int n = 0; n <= N; ++n) a.push_back(n <= 2 ? BigInt(1) : c[n - 2]);
      return a;
    }
    default: unsupported(t, "recurrence");
  }
}

// ---- functional equations -------------------------------------------------

using Step = std::function<Series(const Series&)>;

// Iterates s -> step(s) from 1. Each round must extend the agreement between
// successive iterates; the solution is reached when two iterates coincide.
Series iterate(const Tag& t, int N, const Step& step) {
  Series s = Series::constant(N, 1);
  int last = -1;
  for (int round = 0; round <= N + 1; ++round) {
    Series next = step(s);
    const int agree = agreement(s, next);
    if (agree > N) return next;
    if (agree <= last) {
      throw Error(Errc::NonConvergence,
                  "fixpoint for " + std::string(tag_name(t)) + " stalled at degree " +
                      std::to_string(agree),
                  agree);
    }
    last = agree;
    s = std::move(next);
  }
  throw Error(Errc::NonConvergence,
              "fixpoint for " + std::string(tag_name(t)) + " did not settle", N);
}

// The equation for a tag: the step map, an optional transform applied to the
// fixed point, and the tag whose equation it is (FF is solved through an
// auxiliary series).
struct Equation {
  Step step;
  std::function<Series(const Series&)> finish;
};

Series solve_equation(const Tag& t, int N, const Equation& eq) {
  Series s = iterate(t, N, eq.step);
  return eq.finish ? eq.finish(s) : s;
}

Equation equation_for(const Tag& t, int N) {
  const Series x = x_series(N);
  const auto one = Rational(1);

  if (const auto* set = std::get_if<SetSeries>(&t)) {
    switch (*set) {
      case SetSeries::L: return {[=](const Series& s) { return geometric(x * s); }, {}};
      case SetSeries::Bbar:
        return {[=](const Series& s) { return ((one + x) * (one - x * s)).inverse(); }, {}};
      case SetSeries::B: {
        const Series xbb = x * solve_fixpoint(SetSeries::Bbar, N);
        const Series tail = xbb * geometric(xbb);
        return {[=](const Series& s) { return one + x * s + x * s * tail; }, {}};
      }
      case SetSeries::Cbar:
        return {[=](const Series& s) { return one + x * x * s * geometric(x * s); }, {}};
      case SetSeries::C: {
        const Series tail = geometric(x * solve_fixpoint(SetSeries::Cbar, N));
        return {[=](const Series& s) { return one + x * s + x * x * s * tail; }, {}};
      }
      case SetSeries::Ebar:
        return {[=](const Series& s) { return one + x * x * x * s * s * geometric(x * s); }, {}};
      case SetSeries::E: {
        const Series eb = solve_fixpoint(SetSeries::Ebar, N);
        const Series tail = eb * geometric(x * eb);
        return {[=](const Series& s) { return one + x * s + x * x * x * s * tail; }, {}};
      }
    }
  }

  // Linear equations s = p + q s, read off the rational class-count series.
  auto linear = [N](std::initializer_list<std::int64_t> p, std::initializer_list<std::int64_t> q) {
    const Series ps = poly(N, p);
    const Series qs = poly(N, q);
    return Equation{[=](const Series& s) { return ps + qs * s; }, {}};
  };

  switch (std::get<Relation>(t)) {
    case Relation::U: {
      const Series a = poly(N, {1, -2}).inverse();
      return {[=](const Series& s) { return a - x * s * s; }, {}};
    }
    case Relation::UU: {
      const Series d = poly(N, {1, -2, 1, -1});
      const Series inv = poly(N, {1, -2, 1}).inverse();
      return {[=](const Series& s) { return (one - x * d * s * s) * inv; }, {}};
    }
    case Relation::UF:
    case Relation::FU: {
      const Series q = poly(N, {0, -1, 1, 1});
      const Series inv = poly(N, {1, -2}).inverse();
      return {[=](const Series& s) { return (one + q * s * s) * inv; }, {}};
    }
    case Relation::UD: return linear({1}, {0, 1, 1});
    case Relation::DU: return linear({1, 0, -1, -1}, {0, 1, 1});
    case Relation::F: return linear({1, -3, 3}, {0, 4, -5, 2});
    case Relation::D: return linear({1, -1}, {0, 2});
    case Relation::FD:
    case Relation::DF: return linear({1, 0, -1}, {0, 1, 1});
    case Relation::DD: return linear({1, -1}, {0, 2, -1, 1});
    case Relation::FF: {
      // S = 1 + x^3/(1-x)^2 S collects the blocks between long flat runs;
      // the class series is (1 + x^2/(1-x))^3 x^2/(1-x) S + 1/(1-x).
      const Series g = poly(N, {1, -1}).inverse();
      const Series q = x * x * x * g * g;
      const Series w = one + x * x * g;
      const Series outer = w * w * w * x * x * g;
      return {[=](const Series& s) { return one + q * s; },
              [=](const Series& s) { return outer * s + g; }};
    }
    case Relation::Uk: return equation_for(SetSeries::B, N);
    case Relation::UkD: return equation_for(SetSeries::C, N);
    case Relation::UkF:
    case Relation::FUk: return equation_for(SetSeries::E, N);
    case Relation::DUk: {
      Equation eq = equation_for(SetSeries::C, N);
      eq.finish = [=](const Series& c) { return one + x + x * x * c; };
      return eq;
    }
  }
  unsupported(t, "functional equation");
}

BigInt to_big(std::uint64_t v) { return BigInt(v); }

}  // namespace

std::string_view tag_name(const Tag& t) {
  if (const auto* r = std::get_if<Relation>(&t)) return relation_name(*r);
  for (const auto& [value, name] : kSetNames) {
    if (value == std::get<SetSeries>(t)) return name;
  }
  return "?";
}

Tag parse_tag(std::string_view name) {
  for (const auto& [value, text] : kSetNames) {
    if (text == name) return value;
  }
  if (auto r = find_relation(name)) return *r;
  throw Error(Errc::UnknownName, "unknown series tag '" + std::string(name) + "'");
}

std::string_view series_method_name(SeriesMethod m) {
  switch (m) {
    case SeriesMethod::Closed: return "closed";
    case SeriesMethod::Recurrence: return "recurrence";
    case SeriesMethod::Fixpoint: return "fixpoint";
  }
  return "?";
}

SeriesMethod parse_series_method(std::string_view name) {
  for (auto m : {SeriesMethod::Closed, SeriesMethod::Recurrence, SeriesMethod::Fixpoint}) {
    if (series_method_name(m) == name) return m;
  }
  throw Error(Errc::UnknownName, "unknown series method '" + std::string(name) + "'");
}

std::vector<SeriesMethod> available_methods(const Tag& t) {
  std::vector<SeriesMethod> out;
  if (const auto* set = std::get_if<SetSeries>(&t)) {
    const bool rich = *set == SetSeries::L || *set == SetSeries::B || *set == SetSeries::C ||
                      *set == SetSeries::E;
    if (rich) out = {SeriesMethod::Closed, SeriesMethod::Recurrence};
    out.push_back(SeriesMethod::Fixpoint);
    return out;
  }
  switch (std::get<Relation>(t)) {
    case Relation::UU:
    case Relation::UF:
    case Relation::FU:
    case Relation::FF: return {SeriesMethod::Closed, SeriesMethod::Fixpoint};
    case Relation::DD:
    case Relation::Uk:
    case Relation::UkD:
    case Relation::UkF:
    case Relation::FUk:
    case Relation::DUk:
      return {SeriesMethod::Closed, SeriesMethod::Recurrence, SeriesMethod::Fixpoint};
    default: return {SeriesMethod::Recurrence, SeriesMethod::Fixpoint};
  }
}

Series expand_closed(const Tag& t, int N) {
  if (N < 0) throw Error(Errc::ResourceLimit, "series order must be non-negative", N);
  const Series s = closed_at(t, N + kClosedSlack).truncated(N);
  s.integers();  // exported coefficients must be integral
  return s;
}

Series expand_recurrence(const Tag& t, int N) {
  if (N < 0) throw Error(Errc::ResourceLimit, "series order must be non-negative", N);
  return from_big(N, recurrence_terms(t, N));
}

Series solve_fixpoint(const Tag& t, int N) {
  if (N < 0) throw Error(Errc::ResourceLimit, "series order must be non-negative", N);
  const Series s = solve_equation(t, N, equation_for(t, N));
  s.integers();
  return s;
}

Series fixpoint_residual(const Tag& t, int N) {
  const Equation eq = equation_for(t, N);
  const Series s = iterate(t, N, eq.step);
  return s - eq.step(s);
}

Series expand(const Tag& t, SeriesMethod m, int N) {
  switch (m) {
    case SeriesMethod::Closed: return expand_closed(t, N);
    case SeriesMethod::Recurrence: return expand_recurrence(t, N);
    case SeriesMethod::Fixpoint: return solve_fixpoint(t, N);
  }
  return Series(N);
}

std::uint64_t count_paths_in_set(SetSeries s, int n) {
  std::uint64_t count = 0;
  PathEnumerator(n, Family::Lukasiewicz).for_each([&](const Path& p) {
    bool keep = true;
    switch (s) {
      case SetSeries::L: break;
      case SetSeries::B: keep = in_subset(p, Subset::B); break;
      case SetSeries::Bbar: keep = in_subset(p, Subset::Bbar); break;
      case SetSeries::C: keep = in_subset(p, Subset::C); break;
      case SetSeries::Cbar: keep = in_subset(p, Subset::Cbar); break;
      case SetSeries::E: keep = in_subset(p, Subset::E); break;
      case SetSeries::Ebar: keep = in_subset(p, Subset::Ebar); break;
    }
    if (keep) ++count;
  });
  return count;
}

bool VerificationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

VerificationReport compare(const Tag& t, int N, const CompareOptions& options) {
  VerificationReport report;
  const std::string name(tag_name(t));
  const auto* relation = std::get_if<Relation>(&t);

  std::vector<std::pair<std::string, Series>> expansions;
  for (SeriesMethod m : available_methods(t)) {
    expansions.emplace_back(std::string(series_method_name(m)), expand(t, m, N));
  }

  OracleOptions oracle;
  oracle.bound = options.oracle_bound;
  oracle.parallel = options.parallel;

  for (int n = 0; n <= N; ++n) {
    std::vector<std::pair<std::string, BigInt>> values;
    if (n <= options.oracle_bound) {
      const std::uint64_t v = relation ? count_classes_oracle(n, *relation, oracle).count
                                       : count_paths_in_set(std::get<SetSeries>(t), n);
      values.emplace_back("oracle", to_big(v));
    }
    if (relation && has_position_characterization(*relation) && n <= 62) {
      values.emplace_back("characterization",
                          to_big(count_valid_position_sets(n, *relation).count));
    }
    for (const auto& [method, series] : expansions) {
      values.emplace_back(method, numerator(series[n]));
    }

    BigInt reference;
    std::optional<std::uint64_t> published;
    if (relation) published = table1_value(*relation, n);
    if (n == 0) {
      reference = 1;
    } else if (published) {
      reference = *published;
    } else if (!values.empty()) {
      reference = values.front().second;
    }
    for (auto& [method, value] : values) {
      report.rows.push_back({n, name, method, value, reference, value == reference});
    }
  }
  return report;
}

std::string verification_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "n,relation,method,value,reference,pass\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.tag << ',' << r.method << ',' << r.value << ',' << r.reference << ','
        << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

nlohmann::json verification_json(const VerificationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"relation", r.tag},
                    {"method", r.method},
                    {"value", r.value.str()},
                    {"reference", r.reference.str()},
                    {"pass", r.pass}});
  }
  return {{"passed", report.passed()}, {"rows", rows}};
}

}  // namespace lukas
