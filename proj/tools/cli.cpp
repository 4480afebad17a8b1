#include "macd/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <thread>

#include "macd/compression.hpp"
#include "macd/errors.hpp"
#include "macd/fillings.hpp"
#include "macd/oracle.hpp"
#include "macd/ram_yip.hpp"

namespace macd {

using nlohmann::ordered_json;

namespace {

std::string content_text(const Content& c) {
  std::string s = "x[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("coefficient must be an integer or a decimal string");
}

ordered_json parts_json(std::span<const int> parts) {
  ordered_json a = ordered_json::array();
  for (int x : parts) a.push_back(x);
  return a;
}

struct Common {
  std::string lambda_text;
  int n = 0;
  int threads = -1;
  long long term_cap = -1;
  bool progress = false;
};

void add_shape_options(CLI::App* cmd, Common& common, bool required = true) {
  auto* opt = cmd->add_option("--lambda", common.lambda_text, "partition as a comma list, e.g. 3,2,1,0");
  if (required) opt->required();
  cmd->add_option("-n", common.n, "number of variables (default: number of listed parts)");
}

Partition parse_shape(const Common& common) {
  auto parts = Partition::parse_parts(common.lambda_text);
  const int n = common.n > 0 ? common.n : static_cast<int>(parts.size());
  return Partition::regular(std::move(parts), n);
}

ExecConfig make_config(const Common& common) {
  ExecConfig cfg = ExecConfig::from_env();
  if (common.threads >= 0) {
    cfg.threads = common.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                      : static_cast<unsigned>(common.threads);
  }
  if (common.term_cap >= 0) cfg.term_cap = static_cast<std::uint64_t>(common.term_cap);
  return cfg;
}

SymFunQT compute_formula(const std::string& formula, const Partition& lambda,
                         const ExecConfig& cfg) {
  if (formula == "ram-yip") return ry_sum(lambda, cfg);
  if (formula == "compressed") return compressed_sum(lambda, cfg);
  throw InvalidInput("unknown formula '" + formula + "' (expected ram-yip or compressed)");
}

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

ordered_json oracle_json(const SpecializationReport& rep) {
  ordered_json j;
  j["pass"] = rep.ok();
  j["seed"] = rep.seed;
  j["symmetric"] = rep.symmetric;
  j["monic"] = rep.monic;
  j["oracle_agrees"] = rep.oracle_agrees;
  j["schur_agrees"] = rep.schur_agrees;
  ordered_json pts = ordered_json::array();
  for (const auto& [q0, t0] : rep.points)
    pts.push_back({rational_to_string(q0), rational_to_string(t0)});
  j["points"] = pts;
  j["schur_point"] = rational_to_string(rep.schur_point);
  if (!rep.ok()) j["first_failure"] = rep.first_failure;
  return j;
}

// ------------------------------------------------------------------ commands

int cmd_chain(const Common& common, bool annotate, std::ostream& out) {
  const Partition lambda = parse_shape(common);
  const AnnotatedChain chain = build_chain(lambda);
  out << chain.to_string() << "\n";
  if (annotate) {
    out << "m = " << chain.size() << "\n";
    for (int p = 1; p <= chain.size(); ++p) {
      const auto& e = chain.at(p);
      out << p << " " << e.root.to_string() << " column " << e.column << " mult " << e.mult
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_compute(const Common& common, const std::string& formula, const std::string& format,
                std::ostream& out, std::ostream& err) {
  const Partition lambda = parse_shape(common);
  const ExecConfig cfg = make_config(common);
  if (common.progress)
    err << "computing " << formula << " for " << lambda.to_string() << " on " << cfg.threads
        << " thread(s)\n";
  const SymFunQT p = compute_formula(formula, lambda, cfg);
  if (format == "json")
    out << symfun_to_json(p, lambda) << "\n";
  else
    out << symfun_to_text(p) << "\n";
  if (common.progress) err << "done: " << p.size() << " monomials\n";
  return kExitOk;
}

int cmd_count(const Common& common, const std::string& convention, std::ostream& out) {
  const Partition lambda = parse_shape(common);
  const ExecConfig cfg = make_config(common);
  if (convention == "ram-yip") {
    out << folding_pair_count(build_chain(lambda).size(), lambda.n()) << "\n";
    return kExitOk;
  }
  AttackConvention conv;
  if (convention == "paper")
    conv = AttackConvention::paper;
  else if (convention == "hhl")
    conv = AttackConvention::hhl;
  else
    throw InvalidInput("unknown convention '" + convention + "' (expected paper, hhl or ram-yip)");
  out << count_nonattacking(lambda, conv, cfg) << "\n";
  return kExitOk;
}

struct VerifyFlags {
  bool per_class = false;
  bool oracle = false;
  bool map_properties = false;
  std::uint64_t seed = 1;
  std::string q;
  std::string t;
  std::string formula = "compressed";
  std::string input;
};

int cmd_verify(const Common& common, const VerifyFlags& flags, std::ostream& out,
               std::ostream& err) {
  Partition lambda;
  SymFunQT given;
  const bool from_input = !flags.input.empty();
  if (from_input) {
    given = symfun_from_json(read_input(flags.input), lambda);
    lambda.require_regular();
  } else {
    lambda = parse_shape(common);
  }
  if (flags.q.empty() != flags.t.empty()) throw InvalidInput("--q and --t must be given together");
  const ExecConfig cfg = make_config(common);

  ordered_json report;
  report["lambda"] = parts_json(lambda.parts());
  report["n"] = lambda.n();
  ordered_json checks = ordered_json::object();
  bool pass = true;
  std::string first_counterexample;

  const bool only_global = !flags.per_class && !flags.oracle && !flags.map_properties;
  if (only_global) {
    if (common.progress) err << "global: ram-yip vs compressed\n";
    const SymFunQT ry = ry_sum(lambda, cfg);
    const SymFunQT cs = compressed_sum(lambda, cfg);
    ordered_json g;
    g["pass"] = ry == cs;
    g["monomials"] = cs.size();
    if (!(ry == cs)) {
      for (const auto& [c, coef] : cs.terms())
        if (!(ry.coefficient(c) == coef)) {
          first_counterexample = content_text(c) + ": ram-yip " + ry.coefficient(c).to_string() +
                                 ", compressed " + coef.to_string();
          break;
        }
      if (first_counterexample.empty())
        for (const auto& [c, coef] : ry.terms())
          if (!(cs.coefficient(c) == coef)) {
            first_counterexample = content_text(c) + ": ram-yip " + coef.to_string() +
                                   ", compressed 0";
            break;
          }
      g["first_counterexample"] = first_counterexample;
    }
    if (from_input) {
      g["input_matches"] = given == cs;
      g["pass"] = g["pass"].get<bool>() && given == cs;
    }
    pass = pass && g["pass"].get<bool>();
    checks["global"] = g;
  }

  if (flags.per_class) {
    if (common.progress) err << "per-class: grouping folding pairs by filling\n";
    const CompressionReport rep = verify_all_classes(lambda, cfg);
    ordered_json pc;
    pc["pass"] = rep.ok();
    pc["classes"] = rep.classes.size();
    pc["passed"] = rep.passed();
    pc["nonattacking_fillings"] = rep.nonattacking;
    pc["folding_pairs"] = rep.folding_pairs;
    pc["expected_pairs"] = rep.expected_pairs;
    pc["fibers_partition"] = rep.fibers_partition;
    ordered_json list = ordered_json::array();
    for (const auto& c : rep.classes)
      list.push_back({{"filling", c.sigma.to_string()}, {"fiber", c.fiber_size}, {"pass", c.ok}});
    pc["results"] = list;
    if (const ClassCheck* bad = rep.first_failure()) {
      pc["first_counterexample"] = {{"filling", bad->sigma.to_string()}, {"detail", bad->detail}};
      if (first_counterexample.empty())
        first_counterexample = bad->sigma.to_string() + ": " + bad->detail;
    } else if (!rep.fibers_partition && first_counterexample.empty()) {
      first_counterexample = "fibers do not partition the folding pairs";
    }
    pass = pass && rep.ok();
    checks["per_class"] = pc;
  }

  if (flags.oracle) {
    const SymFunQT p = from_input ? given : compute_formula(flags.formula, lambda, cfg);
    const SpecializationReport rep =
        flags.q.empty()
            ? check_specializations(p, lambda, lambda.n(), flags.seed)
            : check_specializations_at(p, lambda, lambda.n(), parse_rational(flags.q),
                                       parse_rational(flags.t), flags.seed);
    ordered_json oj = oracle_json(rep);
    oj["source"] = from_input ? "input" : flags.formula;
    if (!rep.ok() && first_counterexample.empty()) first_counterexample = rep.first_failure;
    pass = pass && rep.ok();
    checks["oracle"] = oj;
  }

  if (flags.map_properties) {
    const MapPropertyReport rep = check_map_properties(lambda, cfg);
    ordered_json mj;
    mj["pass"] = rep.ok();
    mj["pairs_checked"] = rep.pairs_checked;
    mj["fillings_checked"] = rep.fillings_checked;
    mj["content_identity"] = rep.content_identity;
    mj["image_nonattacking"] = rep.image_nonattacking;
    mj["witness_round_trip"] = rep.witness_round_trip;
    if (!rep.ok()) {
      mj["first_failure"] = rep.first_failure;
      if (first_counterexample.empty()) first_counterexample = rep.first_failure;
    }
    pass = pass && rep.ok();
    checks["map_properties"] = mj;
  }

  report["checks"] = checks;
  report["pass"] = pass;
  out << report.dump(2) << "\n";
  if (!pass) err << "verification failed: " << first_counterexample << "\n";
  return pass ? kExitOk : kExitFailed;
}

int cmd_table(const std::string& rows, bool images, const std::string& format, const Common& common,
              std::ostream& out, std::ostream& err) {
  const auto shapes = table_shapes();
  std::vector<std::size_t> selected;
  if (rows.empty()) {
    for (std::size_t i = 0; i < shapes.size(); ++i) selected.push_back(i);
  } else {
    for (int r : Partition::parse_parts(rows)) {
      if (r < 1 || r > static_cast<int>(shapes.size()))
        throw InvalidInput("--rows entries must lie in [1, " + std::to_string(shapes.size()) + "]");
      selected.push_back(static_cast<std::size_t>(r - 1));
    }
  }
  const ExecConfig cfg = make_config(common);
  std::vector<TableRow> computed;
  for (auto i : selected) {
    if (common.progress) err << "row " << shapes[i].to_string() << "\n";
    computed.push_back(compute_table_row(shapes[i], images, cfg));
  }
  if (format == "json") {
    ordered_json a = ordered_json::array();
    for (const auto& r : computed) {
      ordered_json j;
      j["lambda"] = parts_json(r.lambda.parts());
      j["n"] = r.lambda.n();
      j["m"] = r.chain_length;
      j["folding_pairs"] = r.folding_pairs;
      j["t"] = r.t_count;
      j["hhl"] = r.hhl_count;
      j["c"] = format_tenths(r.c_tenths);
      j["r"] = format_tenths(r.r_tenths);
      if (r.distinct_images >= 0) j["distinct_images"] = r.distinct_images;
      a.push_back(j);
    }
    out << a.dump(2) << "\n";
  } else {
    out << std::left << std::setw(17) << "lambda" << std::right << std::setw(3) << "n"
        << std::setw(12) << "t(lambda)" << std::setw(11) << "c(lambda)" << std::setw(11)
        << "r(lambda)" << "\n";
    for (const auto& r : computed)
      out << std::left << std::setw(17) << r.lambda.to_string() << std::right << std::setw(3)
          << r.lambda.n() << std::setw(12) << format_thousands(r.t_count) << std::setw(11)
          << format_tenths(r.c_tenths) << std::setw(11) << format_tenths(r.r_tenths) << "\n";
  }
  bool ok = true;
  for (const auto& r : computed)
    if (r.distinct_images >= 0 && static_cast<std::uint64_t>(r.distinct_images) != r.t_count) {
      err << "filling-map image of " << r.lambda.to_string() << " has " << r.distinct_images
          << " fillings, expected " << r.t_count << "\n";
      ok = false;
    }
  return ok ? kExitOk : kExitFailed;
}

int cmd_bench(const Common& common, int repeat, std::ostream& out, std::ostream& err) {
  const Partition lambda = parse_shape(common);
  const ExecConfig cfg = make_config(common);
  ordered_json j;
  j["lambda"] = parts_json(lambda.parts());
  j["n"] = lambda.n();
  j["threads"] = cfg.threads;
  j["ram_yip_terms"] = ry_term_count(lambda, cfg);
  j["compressed_terms"] = count_nonattacking(lambda, AttackConvention::paper, cfg);
  for (const std::string formula : {"ram-yip", "compressed"}) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t monomials = 0;
    for (int r = 0; r < std::max(1, repeat); ++r) {
      if (common.progress) err << formula << " run " << r + 1 << "\n";
      const auto start = std::chrono::steady_clock::now();
      const SymFunQT p = compute_formula(formula, lambda, cfg);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      best = std::min(best, dt.count());
      monomials = p.size();
    }
    j[formula] = {{"seconds", best}, {"monomials", monomials}};
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

// ------------------------------------------------------------- serialization

std::string symfun_to_text(const SymFunQT& p) {
  std::string out;
  for (const auto& [c, coef] : p.terms()) {
    if (!out.empty()) out += " + ";
    if (coef == RationalQT(1))
      out += content_text(c);
    else
      out += "(" + coef.to_string() + ")*" + content_text(c);
  }
  return out.empty() ? "0" : out;
}

std::string symfun_to_json(const SymFunQT& p, const Partition& lambda) {
  ordered_json doc;
  doc["lambda"] = parts_json(lambda.parts());
  doc["n"] = p.n();
  ordered_json monomials = ordered_json::array();
  for (const auto& [c, coef] : p.terms()) {
    ordered_json m;
    m["exp"] = parts_json(c);
    ordered_json num = ordered_json::array();
    for (const auto& t : coef.num().terms()) num.push_back({t.exp.a, t.exp.b, integer_json(t.coef)});
    ordered_json den = ordered_json::array();
    for (const auto& d : coef.den()) den.push_back({d.a, d.b});
    m["num"] = num;
    m["den"] = den;
    monomials.push_back(m);
  }
  doc["monomials"] = monomials;
  return doc.dump();
}

SymFunQT symfun_from_json(const std::string& text, Partition& lambda) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
    const int n = doc.at("n").get<int>();
    lambda = Partition(doc.at("lambda").get<std::vector<int>>(), n);
    SymFunQT p(n, lambda.size());
    for (const auto& m : doc.at("monomials")) {
      std::vector<LaurentQT::Term> terms;
      for (const auto& t : m.at("num"))
        terms.push_back({{t.at(0).get<int>(), t.at(1).get<int>()}, integer_from_json(t.at(2))});
      std::vector<DenomFactor> den;
      for (const auto& d : m.at("den")) den.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
      p.add_term(m.at("exp").get<Content>(),
                 RationalQT(LaurentQT::from_terms(std::move(terms)), std::move(den)));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed polynomial JSON: ") + e.what());
  }
}

// --------------------------------------------------------------------- table

std::int64_t round_tenths(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidInput("ratio with zero denominator");
  const Integer tenths = (Integer(20) * num + den) / (Integer(2) * den);
  return static_cast<std::int64_t>(tenths);
}

std::string format_tenths(std::int64_t tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::string format_thousands(std::uint64_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

std::vector<Partition> table_shapes() {
  return {Partition::regular({3, 2, 1, 0}, 4), Partition::regular({5, 3, 1, 0}, 4),
          Partition::regular({4, 3, 2, 1, 0}, 5), Partition::regular({5, 4, 2, 1, 0}, 5)};
}

TableRow compute_table_row(const Partition& lambda, bool enumerate_images, const ExecConfig& cfg) {
  TableRow row;
  row.lambda = lambda;
  row.chain_length = build_chain(lambda).size();
  row.folding_pairs = folding_pair_count(row.chain_length, lambda.n());
  row.t_count = count_nonattacking(lambda, AttackConvention::paper, cfg);
  row.hhl_count = count_nonattacking(lambda, AttackConvention::hhl, cfg);
  row.c_tenths = round_tenths(row.folding_pairs, row.t_count);
  row.r_tenths = round_tenths(row.hhl_count, row.t_count);
  if (enumerate_images)
    row.distinct_images = static_cast<std::int64_t>(filling_map_image(lambda, cfg).distinct_images);
  return row;
}

// ----------------------------------------------------------------------- cli

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Macdonald polynomials by the Ram-Yip and compressed formulas", "macd"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads (0 = all cores; default MACD_THREADS)");
  app.add_option("--term-cap", common.term_cap, "largest enumeration allowed (default MACD_TERM_CAP)");
  app.add_flag("--progress", common.progress, "progress messages on stderr");

  bool annotate = false;
  auto* chain = app.add_subcommand("chain", "print the lambda-chain");
  add_shape_options(chain, common);
  chain->add_flag("--annotate", annotate, "list roots, columns and multiplicities");

  std::string formula = "compressed";
  std::string format = "text";
  auto* compute = app.add_subcommand("compute", "compute P_lambda");
  add_shape_options(compute, common);
  compute->add_option("--formula", formula, "ram-yip or compressed");
  compute->add_option("--out", format, "json or text");

  std::string convention = "paper";
  auto* count = app.add_subcommand("count", "count terms of a formula");
  add_shape_options(count, common);
  count->add_option("--convention", convention, "paper, hhl or ram-yip");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "check P_lambda; exit 1 on any failure");
  add_shape_options(verify, common, false);
  verify->add_flag("--per-class", vf.per_class, "check every fiber of the filling map");
  verify->add_flag("--oracle", vf.oracle, "compare with the orthogonality and Schur oracles");
  verify->add_flag("--map-properties", vf.map_properties, "check content identity and surjectivity");
  verify->add_option("--seed", vf.seed, "seed for the oracle's random points");
  verify->add_option("--q", vf.q, "oracle point q0 as a/b");
  verify->add_option("--t", vf.t, "oracle point t0 as c/d");
  verify->add_option("--formula", vf.formula, "formula checked by --oracle");
  verify->add_option("--input", vf.input, "polynomial JSON from compute ('-' for stdin)");

  std::string rows;
  bool images = false;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "recompute the compression table");
  table->add_option("--rows", rows, "1-based rows to compute, e.g. 1,2");
  table->add_flag("--images", images, "also enumerate all folding pairs through the filling map");
  table->add_option("--out", table_format, "json or text");

  int repeat = 1;
  auto* bench = app.add_subcommand("bench", "time both formulas");
  add_shape_options(bench, common);
  bench->add_option("--repeat", repeat, "runs per formula; the best time is reported");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*chain) return cmd_chain(common, annotate, out);
    if (*compute) return cmd_compute(common, formula, format, out, err);
    if (*count) return cmd_count(common, convention, out);
    if (*verify) {
      if (vf.input.empty() && common.lambda_text.empty())
        throw InvalidInput("verify needs --lambda or --input");
      return cmd_verify(common, vf, out, err);
    }
    if (*table) return cmd_table(rows, images, table_format, common, out, err);
    if (*bench) return cmd_bench(common, repeat, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ResourceCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace macd
