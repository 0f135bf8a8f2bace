#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "lukas/canonical.hpp"
#include "lukas/path.hpp"
#include "lukas/patterns.hpp"
#include "lukas/quotient.hpp"
#include "lukas/sequences.hpp"

namespace lukas::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

struct Options {
  std::optional<int> length;
  std::optional<int> max_length;
  std::optional<int> terms;
  std::optional<int> oracle_bound;
  std::string pattern;
  std::string tag;
  std::string method;
  std::string name;
  std::optional<std::string> path;
  std::optional<std::string> positions;
  std::string set;
  std::string family = "Lukasiewicz";
  std::string format = "text";
};

struct Context {
  const Options& opt;
  Format format;
  std::ostream& out;
  std::ostream& err;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("--format must be text, csv or json");
}

template <class T>
const T& require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

const std::string& require(const std::string& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required");
  return v;
}

int oracle_bound(const Options& opt) {
  return opt.oracle_bound ? *opt.oracle_bound : oracle_bound_from_env();
}

// --length N selects one length; --max-length N selects 0..N.
std::vector<int> lengths(const Options& opt, std::optional<int> fallback_max = std::nullopt) {
  if (opt.length && opt.max_length) throw UsageError("give either --length or --max-length");
  if (opt.length) return {*opt.length};
  const auto max = opt.max_length ? opt.max_length : fallback_max;
  if (!max) throw UsageError("--length or --max-length is required");
  std::vector<int> out;
  for (int n = 0; n <= *max; ++n) out.push_back(n);
  return out;
}

std::vector<Relation> relations(const std::string& pattern) {
  require(pattern, "--pattern");
  if (pattern == "all") return {kAllRelations.begin(), kAllRelations.end()};
  return {parse_relation(pattern)};
}

std::vector<int> parse_positions(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item(text.data() + start, comma - start);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || end != item.data() + item.size()) {
      throw UsageError("--positions must be a comma-separated list of integers");
    }
    out.push_back(value);
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw UsageError("--positions contains a duplicate");
  }
  return out;
}

void print_paths(const Context& ctx, const std::vector<Path>& paths) {
  switch (ctx.format) {
    case Format::Text:
      for (const auto& p : paths) ctx.out << p.str() << '\n';
      break;
    case Format::Csv:
      ctx.out << "path\n";
      for (const auto& p : paths) ctx.out << p.str() << '\n';
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& p : paths) arr.push_back(p.str());
      ctx.out << arr.dump() << '\n';
      break;
    }
  }
}

void print_path(const Context& ctx, const Path& p, json extra) {
  switch (ctx.format) {
    case Format::Text: ctx.out << p.str() << '\n'; break;
    case Format::Csv: ctx.out << "path\n" << p.str() << '\n'; break;
    case Format::Json:
      extra["path"] = p.str();
      ctx.out << extra.dump() << '\n';
      break;
  }
}

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

int cmd_enumerate(const Context& ctx) {
  const int n = require(ctx.opt.length, "--length");
  if (n > oracle_bound(ctx.opt)) {
    throw Error(Errc::ResourceLimit, "length exceeds the oracle bound", n);
  }
  const Family family = parse_family(ctx.opt.family);
  std::optional<Subset> subset;
  if (!ctx.opt.set.empty()) subset = parse_subset(ctx.opt.set);
  std::vector<Path> paths;
  PathEnumerator(n, family).for_each([&](const Path& p) {
    if (!subset || in_subset(p, *subset)) paths.push_back(p);
  });
  print_paths(ctx, paths);
  return kExitOk;
}

int cmd_classes(const Context& ctx) {
  const auto rels = relations(ctx.opt.pattern);
  const std::string method = ctx.opt.method.empty() ? "oracle" : ctx.opt.method;
  OracleOptions oracle;
  oracle.bound = oracle_bound(ctx.opt);

  std::vector<ClassCount> rows;
  for (int n : lengths(ctx.opt)) {
    if (method == "oracle") {
      if (rels.size() == 1) {
        rows.push_back(count_classes_oracle(n, rels.front(), oracle));
      } else {
        if (n >= 11) ctx.err << "sweeping length " << n << "...\n";
        const auto all = count_classes_oracle_all(n, oracle);
        for (Relation r : rels) rows.push_back({n, r, CountMethod::Oracle, all[index_of(r)]});
      }
    } else if (method == "characterization") {
      for (Relation r : rels) {
        if (!has_position_characterization(r)) {
          throw Error(Errc::UnsupportedPattern,
                      "no position-set characterization for " + std::string(relation_name(r)));
        }
        rows.push_back(count_valid_position_sets(n, r));
      }
    } else {
      throw UsageError("classes --method must be oracle or characterization");
    }
  }

  switch (ctx.format) {
    case Format::Text:
      if (rows.size() == 1) {
        ctx.out << rows.front().count << '\n';
      } else {
        for (const auto& r : rows) {
          ctx.out << r.n << ' ' << relation_name(r.relation) << ' ' << r.count << '\n';
        }
      }
      break;
    case Format::Csv: ctx.out << class_counts_csv(rows); break;
    case Format::Json: ctx.out << class_counts_json(rows).dump() << '\n'; break;
  }
  return kExitOk;
}

int cmd_verify(const Context& ctx) {
  std::vector<Tag> tags;
  if (!ctx.opt.tag.empty()) {
    tags.push_back(parse_tag(ctx.opt.tag));
  } else {
    for (Relation r : relations(ctx.opt.pattern)) tags.push_back(r);
  }
  if (ctx.opt.length) throw UsageError("verify takes --max-length");
  const int max = ctx.opt.max_length.value_or(10);

  CompareOptions options;
  options.oracle_bound = oracle_bound(ctx.opt);
  VerificationReport report;
  for (const Tag& t : tags) {
    ctx.err << "verifying " << tag_name(t) << " through n = " << max << '\n';
    auto part = compare(t, max, options);
    report.rows.insert(report.rows.end(), part.rows.begin(), part.rows.end());
  }

  switch (ctx.format) {
    case Format::Text: {
      std::size_t failed = 0;
      for (const auto& r : report.rows) {
        ctx.out << r.n << ' ' << r.tag << ' ' << r.method << ' ' << r.value << ' ' << r.reference
                << ' ' << (r.pass ? "PASS" : "FAIL") << '\n';
        if (!r.pass) ++failed;
      }
      ctx.out << report.rows.size() << " rows, " << failed << " failed\n";
      break;
    }
    case Format::Csv: ctx.out << verification_csv(report); break;
    case Format::Json: ctx.out << verification_json(report).dump() << '\n'; break;
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_series(const Context& ctx) {
  const Tag tag = parse_tag(require(ctx.opt.tag, "--tag"));
  const int terms = ctx.opt.terms.value_or(10);
  std::vector<SeriesMethod> methods;
  if (ctx.opt.method.empty() || ctx.opt.method == "all") {
    methods = available_methods(tag);
  } else {
    methods = {parse_series_method(ctx.opt.method)};
  }

  std::vector<std::pair<SeriesMethod, std::vector<BigInt>>> results;
  for (SeriesMethod m : methods) results.emplace_back(m, expand(tag, m, terms).integers());

  switch (ctx.format) {
    case Format::Text:
      for (const auto& [m, coef] : results) {
        ctx.out << tag_name(tag) << ' ' << series_method_name(m) << ':';
        for (const auto& c : coef) ctx.out << ' ' << c;
        ctx.out << '\n';
      }
      break;
    case Format::Csv:
      ctx.out << "n,tag,method,coefficient\n";
      for (const auto& [m, coef] : results) {
        for (std::size_t n = 0; n < coef.size(); ++n) {
          ctx.out << n << ',' << tag_name(tag) << ',' << series_method_name(m) << ',' << coef[n]
                  << '\n';
        }
      }
      break;
    case Format::Json: {
      json by_method = json::object();
      for (const auto& [m, coef] : results) {
        json arr = json::array();
        for (const auto& c : coef) arr.push_back(big_to_json(c));
        by_method[std::string(series_method_name(m))] = arr;
      }
      ctx.out << json{{"tag", tag_name(tag)}, {"terms", terms}, {"methods", by_method}}.dump()
              << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_canon(const Context& ctx) {
  const Relation r = parse_relation(require(ctx.opt.pattern, "--pattern"));
  if (ctx.opt.path) {
    const Path p = Path::parse(*ctx.opt.path);
    const CanonicalForm form = canonical_form(p, r);
    print_path(ctx, form.path,
               {{"relation", relation_name(r)}, {"target", target_name(form.target)}});
    return kExitOk;
  }
  const int n = require(ctx.opt.length, "--length or --path");
  if (n > oracle_bound(ctx.opt)) {
    throw Error(Errc::ResourceLimit, "length exceeds the oracle bound", n);
  }
  // One representative per class: the smallest image among its members.
  std::map<std::string, Path> by_class;
  PathEnumerator(n, Family::Lukasiewicz).for_each([&](const Path& p) {
    Path image = canonical_form(p, r).path;
    auto [it, inserted] = by_class.try_emplace(signature_key(p, r), image);
    if (!inserted && image < it->second) it->second = std::move(image);
  });
  std::set<Path> reps;
  for (auto& [key, rep] : by_class) reps.insert(rep);
  print_paths(ctx, {reps.begin(), reps.end()});
  return kExitOk;
}

int cmd_map(const Context& ctx) {
  const MapName m = parse_map_name(require(ctx.opt.name, "--name"));
  const Path p = Path::parse(require(ctx.opt.path, "--path"));
  Relation alpha = Relation::FU;
  if (m == MapName::Runs) alpha = parse_relation(require(ctx.opt.pattern, "--pattern"));
  print_path(ctx, apply_map(m, p, alpha), {{"map", map_name(m)}, {"source", p.str()}});
  return kExitOk;
}

int cmd_witness(const Context& ctx) {
  const Relation r = parse_relation(require(ctx.opt.pattern, "--pattern"));
  const int n = require(ctx.opt.length, "--length");
  const auto positions = parse_positions(ctx.opt.positions.value_or(""));
  print_path(ctx, witness(n, positions, r), {{"pattern", relation_name(r)}, {"length", n}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-equivalence classes of Lukasiewicz paths", "lukas"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--length", opt.length, "path length n")->check(CLI::NonNegativeNumber);
  app.add_option("--max-length", opt.max_length, "run every length 0..N")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--pattern", opt.pattern, "relation name, or 'all'");
  app.add_option("--tag", opt.tag, "series tag: a relation or L, B, Bbar, C, Cbar, E, Ebar");
  app.add_option("--terms", opt.terms, "highest coefficient degree N (default 10)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--method", opt.method, "counting or series method");
  app.add_option("--name", opt.name, "map name");
  app.add_option("--path", opt.path, "path text, e.g. U2DFD");
  app.add_option("--positions", opt.positions, "comma-separated 1-based positions");
  app.add_option("--set", opt.set, "subset filter: B, Bbar, C, Cbar, E, Ebar, Fset");
  app.add_option("--family", opt.family, "Lukasiewicz, Motzkin or Dyck");
  app.add_option("--format", opt.format, "text, csv or json");
  app.add_option("--oracle-bound", opt.oracle_bound, "largest length the oracle may enumerate")
      ->check(CLI::NonNegativeNumber);

  using Command = int (*)(const Context&);
  const std::pair<const char*, Command> commands[] = {
      {"enumerate", cmd_enumerate}, {"classes", cmd_classes}, {"verify", cmd_verify},
      {"series", cmd_series},       {"canon", cmd_canon},     {"map", cmd_map},
      {"witness", cmd_witness}};
  const char* descriptions[] = {"list paths of a length",
                                "count equivalence classes",
                                "check every method against the published counts",
                                "expand a generating function",
                                "class representative of a path, or all of a length",
                                "apply a named map to a path",
                                "build a path with prescribed occurrence positions"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    subs.push_back(app.add_subcommand(commands[i].first, descriptions[i]));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Context ctx{opt, parse_format(opt.format), out, err};
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].second(ctx);
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lukas::cli
