#include "commands.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "json_io.h"
#include "verify.h"

namespace lrscatter::cli {

int MaxRankFromEnv() {
  const char* env = std::getenv("LRSCATTER_MAX_RANK");
  if (env == nullptr || *env == '\0') return kDefaultMaxEnumerationRank;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 2 || v > 12) {
    throw InputError("LRSCATTER_MAX_RANK must be an integer in 2..12");
  }
  return static_cast<int>(v);
}

namespace {

void RequireSameElement(const ReducedWord& a, const ReducedWord& b) {
  if (Evaluate(a) != Evaluate(b)) {
    throw InputError("--from and --to are words of different permutations");
  }
}

Json LrJob(const std::string& lambda_s, const std::string& mu_s,
           const std::string& nu_s, int N, const std::string& oracle,
           bool& agree) {
  if (N < 1) throw InputError("--N must be positive");
  auto lambda = WeightFromJson(ParseJson(lambda_s, "--lambda"), N, "--lambda");
  auto mu = WeightFromJson(ParseJson(mu_s, "--mu"), N, "--mu");
  auto nu = WeightFromJson(ParseJson(nu_s, "--nu"), N, "--nu");

  std::map<std::string, std::function<std::int64_t()>> oracles = {
      {"scattering", [&] { return LrCoefficient(lambda, mu, nu); }},
      {"tableau",
       [&] {
         return oracles::LrTableauCount(lambda.ToPartition(), mu.ToPartition(),
                                        nu.ToPartition());
       }},
      {"pieri",
       [&] {
         return oracles::PieriCoefficient(lambda.ToPartition(),
                                          mu.ToPartition(), nu.ToPartition(),
                                          N);
       }},
      {"bz", [&] { return CountBzPatterns(lambda, mu, nu); }},
  };
  Json values = Json::object();
  values["scattering"] = oracles["scattering"]();
  if (oracle == "all") {
    for (const auto& [name, f] : oracles) {
      if (name != "scattering") values[name] = f();
    }
  } else if (oracle != "scattering") {
    values[oracle] = oracles[oracle]();
  }
  const auto coefficient = values["scattering"].get<std::int64_t>();
  agree = std::all_of(values.begin(), values.end(), [&](const Json& v) {
    return v.get<std::int64_t>() == coefficient;
  });
  return {{"lambda", ToJson(lambda)},
          {"mu", ToJson(mu)},
          {"nu", ToJson(nu)},
          {"N", N},
          {"coefficient", coefficient},
          {"oracles", values},
          {"agree", agree},
          {"status", agree ? "all oracles agree" : "oracles disagree"}};
}

std::string RenderJob(const std::string& kind, const Json& in,
                      RenderFormat format) {
  if (kind == "wiring") {
    const Json& word = in.is_object() ? in.at("word") : in;
    const int n = in.is_object() ? in.value("n", 0) : 0;
    const int s = in.is_object() ? in.value("s", 0) : 0;
    auto w = WordFromJson(word, n, "--input word");
    if (s < 0 || s > w.rank()) throw InputError("--input s outside 0..n");
    return Render(w, format, s);
  }
  if (kind == "web") {
    if (!in.is_object()) {
      throw InputError("--input: expected {\"x\":..,\"y\":..,\"params\":..}");
    }
    auto x = TupleFromJson(in.at("x"), "--input x");
    auto y = TupleFromJson(in.at("y"), "--input y");
    auto c = ParamsFromJson(in.at("params"), x.size() + y.size(),
                            "--input params");
    auto web = WebFromScattering(x, y, c);
    return Render(web ? *web : WebDiagram(), format);
  }
  if (!in.is_object()) {
    throw InputError("--input: expected {\"N\":..,\"values\":..}");
  }
  BzPattern p(in.at("N").get<int>(), IntArray(in.at("values"), "--input values"));
  return Render(p, format);
}

// Defaults per suite, overridden by whatever flags were given.
VerifyOptions SuiteDefaults(const std::string& suite) {
  VerifyOptions o;
  if (suite == "cones" || suite == "duality") o.bound = 4;
  if (suite == "transport") {
    o.bound = 5;
    o.entry_bound = 3;
  }
  return o;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  auto error = [&](const std::string& kind, const std::string& msg) {
    err << Json{{"error", kind}, {"message", msg}}.dump() << "\n";
    return kExitMalformed;
  };

  CLI::App app{"Littlewood-Richardson coefficients by scattering"};
  app.name("lrscatter");
  app.require_subcommand(1);

  std::string lambda_s, mu_s, nu_s, oracle = "all";
  int N = 0;
  auto* lr = app.add_subcommand("lr", "LR coefficient from several oracles");
  lr->add_option("--lambda", lambda_s, "Partition, JSON array")->required();
  lr->add_option("--mu", mu_s, "Partition, JSON array")->required();
  lr->add_option("--nu", nu_s, "Partition, JSON array")->required();
  lr->add_option("--N", N, "Rank of GL(N)")->required();
  lr->add_option("--oracle", oracle, "Oracle to compare with scattering")
      ->check(CLI::IsMember({"scattering", "tableau", "pieri", "bz", "all"}));

  std::string a_s, b_s;
  auto* star = app.add_subcommand("star", "Star product e_a * e_b");
  star->add_option("--a", a_s, "Tuple, JSON array")->required();
  star->add_option("--b", b_s, "Tuple, JSON array")->required();

  std::string word_s, params_s;
  int n = 0;
  auto* cone = app.add_subcommand("cone", "Principal cones");
  cone->require_subcommand(1);
  auto* describe = cone->add_subcommand("describe", "Inequalities of C_w");
  describe->add_option("--word", word_s, "Reduced word, JSON array")
      ->required();
  describe->add_option("--n", n, "Rank (default: max letter + 1)");
  auto* check = cone->add_subcommand("check", "Membership in C_w");
  check->add_option("--word", word_s, "Reduced word, JSON array")->required();
  check->add_option("--params", params_s, "Parameter collection")->required();
  check->add_option("--n", n, "Rank (default: max letter + 1)");

  std::string from_s, to_s;
  auto* transition = app.add_subcommand("transition", "Transition map T_a^b");
  transition->add_option("--from", from_s, "Reduced word a")->required();
  transition->add_option("--to", to_s, "Reduced word b")->required();
  transition->add_option("--params", params_s, "Collection for a")
      ->required();
  transition->add_option("--n", n, "Rank (default: max letter + 1)");

  std::string suite;
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Property suites");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(
          {"yb", "tetra", "assoc", "cones", "duality", "transport"}));
  auto* o_bound = verify->add_option("--bound", vo.bound, "Parameter bound");
  auto* o_entry =
      verify->add_option("--entry-bound", vo.entry_bound, "Tuple entry bound");
  verify->add_option("--seed", vo.seed, "Random seed (default 1)");
  verify->add_option("--trials", vo.trials, "Random trials (default 200)");
  verify->add_option("--n", vo.n, "Rank");
  verify->add_flag("--nonnegative", vo.nonnegative,
                   "Restrict parameters to >= 0");
  verify->add_flag("--in-cone", vo.in_cone,
                   "transport: sample C from the principal cone");

  std::string kind, input_s, format = "ascii", out_path;
  auto* render = app.add_subcommand("render", "SVG or ASCII diagrams");
  render->add_option("kind", kind, "wiring, web or bz")
      ->required()
      ->check(CLI::IsMember({"wiring", "web", "bz"}));
  render->add_option("--input", input_s, "JSON, or @file")->required();
  render->add_option("--format", format, "svg or ascii")
      ->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--out", out_path, "Write here instead of stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return error("usage", e.what());
  }

  try {
    const int max_rank = MaxRankFromEnv();
    auto require_rank = [&](int rank) {
      if (rank > max_rank) {
        throw InputError("rank " + std::to_string(rank) +
                         " exceeds LRSCATTER_MAX_RANK = " +
                         std::to_string(max_rank));
      }
    };

    if (lr->parsed()) {
      bool agree = true;
      out << LrJob(lambda_s, mu_s, nu_s, N, oracle, agree).dump() << "\n";
      return agree ? kExitOk : kExitFailed;
    }
    if (star->parsed()) {
      auto a = TupleFromJson(ParseJson(a_s, "--a"), "--a");
      auto b = TupleFromJson(ParseJson(b_s, "--b"), "--b");
      out << ToJson(StarProduct(a, b)).dump() << "\n";
      return kExitOk;
    }
    if (describe->parsed()) {
      auto w = WordFromJson(ParseJson(word_s, "--word"), n, "--word");
      require_rank(w.rank());
      out << ToJson(PrincipalCone(w)).dump() << "\n";
      return kExitOk;
    }
    if (check->parsed()) {
      auto w = WordFromJson(ParseJson(word_s, "--word"), n, "--word");
      require_rank(w.rank());
      auto c = ParamsFromJson(ParseJson(params_s, "--params"), w.rank(),
                              "--params");
      out << Json{{"word", ToJson(w)},
                  {"params", ToJson(c)},
                  {"member", Contains(w, c)}}
                 .dump()
          << "\n";
      return kExitOk;
    }
    if (transition->parsed()) {
      auto from_j = ParseJson(from_s, "--from");
      auto to_j = ParseJson(to_s, "--to");
      if (n <= 0) {
        auto top = [](const Json& j) {
          auto v = IntArray(j, "word");
          return v.empty() ? 1 : *std::max_element(v.begin(), v.end()) + 1;
        };
        n = std::max(top(from_j), top(to_j));
      }
      auto a = WordFromJson(from_j, n, "--from");
      auto b = WordFromJson(to_j, n, "--to");
      require_rank(n);
      RequireSameElement(a, b);
      auto c = ParamsFromJson(ParseJson(params_s, "--params"), n, "--params");
      if (c.keys() != InversionSet(Evaluate(a))) {
        throw InputError("--params: keys must be the inversions of the word");
      }
      auto chain = FindMoveChain(a, b);
      Json moves = Json::array();
      for (const auto& m : chain) moves.push_back(ToJson(m));
      out << Json{{"from", ToJson(a)},
                  {"to", ToJson(b)},
                  {"params", ToJson(TransitionAlong(a, chain, c))},
                  {"chain", moves}}
                 .dump()
          << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      VerifyOptions o = SuiteDefaults(suite);
      if (o_bound->count()) o.bound = vo.bound;
      if (o_entry->count()) o.entry_bound = vo.entry_bound;
      o.seed = vo.seed;
      o.trials = vo.trials;
      o.n = vo.n;
      o.nonnegative = vo.nonnegative;
      o.in_cone = vo.in_cone;
      o.max_rank = max_rank;
      if (o.bound < 0 || o.entry_bound < 0 || o.trials < 0) {
        throw InputError("bounds and trials must be nonnegative");
      }
      static const std::map<std::string,
                            std::function<VerifyReport(const VerifyOptions&)>>
          suites = {{"yb", VerifyYangBaxter},   {"tetra", VerifyTetrahedron},
                    {"assoc", VerifyAssociativity}, {"cones", VerifyCones},
                    {"duality", VerifyDuality}, {"transport", VerifyTransport}};
      auto report = suites.at(suite)(o);
      out << report.ToJson().dump() << "\n";
      return report.pass ? kExitOk : kExitFailed;
    }
    if (render->parsed()) {
      auto text = RenderJob(kind, ParseJson(input_s, "--input"),
                            format == "svg" ? RenderFormat::kSvg
                                            : RenderFormat::kAscii);
      if (out_path.empty()) {
        out << text;
        return kExitOk;
      }
      std::ofstream file(out_path, std::ios::binary);
      if (!(file << text)) throw InputError("cannot write " + out_path);
      out << Json{{"written", out_path}, {"bytes", text.size()}}.dump()
          << "\n";
      return kExitOk;
    }
  } catch (const InputError& e) {
    return error("input", e.what());
  } catch (const Json::exception& e) {
    return error("input", e.what());
  } catch (const std::invalid_argument& e) {
    return error("input", e.what());
  } catch (const std::out_of_range& e) {
    return error("input", e.what());
  }
  return error("usage", "no subcommand");
}

}  // namespace lrscatter::cli
