// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "macd/cli.hpp"
#include "macd/compression.hpp"
#include "macd/errors.hpp"
#include "macd/fillings.hpp"
#include "macd/oracle.hpp"
#include "macd/ram_yip.hpp"

using namespace macd;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

// Regular shapes lambda_1 > ... > lambda_{n-1} > 0 = lambda_n, filtered by `keep`.
std::vector<Partition> regular_shapes(int max_n, int max_first,
                                      const std::function<bool(const Partition&)>& keep) {
  std::vector<Partition> out;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int idx, int floor) {
      if (idx < 0) {
        Partition p = Partition::regular(parts, n);
        if (keep(p)) out.push_back(p);
        return;
      }
      for (int v = floor + 1; v <= max_first; ++v) {
        parts[static_cast<std::size_t>(idx)] = v;
        rec(idx - 1, v);
      }
    };
    rec(n - 2, 0);
  }
  return out;
}

std::string cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return "exit " + std::to_string(code) + "\n" + out.str();
}

bool symmetric_and_monic(const SymFunQT& p, const Partition& lambda) {
  const Content top(lambda.parts().begin(), lambda.parts().end());
  if (!(p.coefficient(top) == RationalQT(1))) return false;
  for (const auto& [c, coef] : p.terms()) {
    Content perm = c;
    std::sort(perm.begin(), perm.end());
    do
      if (!(p.coefficient(perm) == coef)) return false;
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

Outcome table_reproduction() {
  Outcome o;
  struct Expected {
    std::uint64_t t;
    const char* c;
    const char* r;
  };
  const Expected expected[] = {
      {288, "1.3", "3.0"}, {10368, "4.7", "3.0"}, {34560, "3.6", "7.5"}, {552960, "14.2", "7.5"}};
  const auto shapes = table_shapes();
  ExecConfig cfg = ExecConfig::from_env();
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const TableRow row = compute_table_row(shapes[i], true, cfg);
    const std::string got = format_thousands(row.t_count) + " " + format_tenths(row.c_tenths) +
                            " " + format_tenths(row.r_tenths);
    if (row.t_count != expected[i].t || format_tenths(row.c_tenths) != expected[i].c ||
        format_tenths(row.r_tenths) != expected[i].r)
      o.fail(shapes[i].to_string() + " gave " + got);
    if (row.distinct_images != static_cast<std::int64_t>(row.t_count))
      o.fail(shapes[i].to_string() + ": filling-map image has " +
             std::to_string(row.distinct_images) + " fillings");
    o.note += (o.note.empty() ? "" : "; ") + got;
  }
  return o;
}

Outcome chain_fidelity() {
  Outcome o;
  const auto chain = build_chain(Partition::regular({4, 3, 1, 0}, 4));
  if (chain.to_string() != "((1,4),(1,3) | (2,4),(2,3),(1,4),(1,3) | (2,4),(1,4))")
    o.fail("chain of (4,3,1,0) is " + chain.to_string());
  const int lengths[] = {4, 11, 10, 16};
  const char* printed_c[] = {"1.3", "4.7", "3.6", "14.2"};
  const std::uint64_t printed_t[] = {288, 10368, 34560, 552960};
  const auto shapes = table_shapes();
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const int m = build_chain(shapes[i]).size();
    if (m != lengths[i]) o.fail(shapes[i].to_string() + " has m = " + std::to_string(m));
    const auto c = round_tenths(folding_pair_count(m, shapes[i].n()), printed_t[i]);
    if (format_tenths(c) != printed_c[i]) o.fail(shapes[i].to_string() + " c mismatch");
  }
  if (o.pass) o.note = "m = 8 for (4,3,1,0); 4, 11, 10, 16 for the table";
  return o;
}

Outcome worked_example() {
  Outcome o;
  const Partition lambda = Partition::regular({4, 3, 1, 0}, 4);
  const auto chain = build_chain(lambda);
  const std::vector<int> J{1, 4, 6, 7};
  const auto w = Permutation::parse("2341");
  const auto c = classify_folds(w, J, chain);
  if (c.plus != std::vector<int>{1, 7}) o.fail("J+ differs");
  if (c.minus != std::vector<int>{4, 6}) o.fail("J- differs");
  std::string bruhat;
  for (const auto& p : c.chain) bruhat += (bruhat.empty() ? "" : " ") + p.to_string();
  if (bruhat != "2341 1342 1432 3412 3214") o.fail("Bruhat chain " + bruhat);
  const Filling sigma = filling_map(w, J, chain, lambda);
  if (sigma.to_string() != "2 1 3 3 / 3 4 2 / 1") o.fail("filling " + sigma.to_string());
  if (o.pass) o.note = "J+={1,7}, J-={4,6}, chain " + bruhat + ", filling " + sigma.to_string();
  return o;
}

Outcome cross_formula(std::vector<std::pair<Partition, SymFunQT>>& computed) {
  Outcome o;
  const ExecConfig cfg = ExecConfig::from_env();
  auto shapes = regular_shapes(4, 4, [](const Partition&) { return true; });
  for (const auto& lambda : shapes) {
    const SymFunQT ry = ry_sum(lambda, cfg);
    const SymFunQT cs = compressed_sum(lambda, cfg);
    if (!(ry == cs)) o.fail("formulas differ for " + lambda.to_string());
    computed.emplace_back(lambda, cs);
    computed.emplace_back(lambda, ry);
  }
  if (o.pass) o.note = std::to_string(shapes.size()) + " shapes, including (3, 2, 1, 0)";
  return o;
}

Outcome per_class() {
  Outcome o;
  const ExecConfig cfg = ExecConfig::from_env();
  std::string summary;
  for (const auto& lambda : {Partition::regular({3, 2, 1, 0}, 4), Partition::regular({2, 1, 0}, 3),
                             Partition::regular({2, 0}, 2)}) {
    const CompressionReport rep = verify_all_classes(lambda, cfg);
    if (!rep.ok()) {
      const ClassCheck* bad = rep.first_failure();
      o.fail(lambda.to_string() + ": " + (bad ? bad->detail : "fibers do not partition"));
    }
    summary += (summary.empty() ? "" : ", ") + std::to_string(rep.passed()) + "/" +
               std::to_string(rep.classes.size()) + " classes over " +
               std::to_string(rep.folding_pairs) + " pairs";
  }
  if (summary.rfind("288/288 classes over 384 pairs", 0) != 0)
    o.fail("expected 288 classes over 384 pairs for (3,2,1,0): " + summary);
  if (o.pass) o.note = summary;
  return o;
}

Outcome closed_form() {
  Outcome o;
  const Partition lambda = Partition::regular({2, 0}, 2);
  SymFunQT expected(2, 2);
  expected.add_term({2, 0}, 1);
  expected.add_term({0, 2}, 1);
  expected.add_term({1, 1}, RationalQT((LaurentQT(1) + LaurentQT::monomial(1, 1, 0)) *
                                           LaurentQT::one_minus(0, 1),
                                       {{1, 1}}));
  const ExecConfig cfg;
  if (!(ry_sum(lambda, cfg) == expected)) o.fail("ram-yip differs");
  if (!(compressed_sum(lambda, cfg) == expected)) o.fail("compressed differs");
  if (o.pass) o.note = "P_(2,0) = m_2 + (1+q)(1-t)/(1-qt) m_11 from both formulas";
  return o;
}

Outcome oracle_agreement(std::vector<std::pair<Partition, SymFunQT>>& computed) {
  Outcome o;
  const ExecConfig cfg = ExecConfig::from_env();
  const auto shapes = regular_shapes(4, 7, [](const Partition& p) { return p.size() <= 7; });
  std::uint64_t seed = 1;
  for (const auto& lambda : shapes) {
    for (const std::string formula : {"compressed", "ram-yip"}) {
      const SymFunQT p = formula == "ram-yip" ? ry_sum(lambda, cfg) : compressed_sum(lambda, cfg);
      const SpecializationReport rep = check_specializations(p, lambda, lambda.n(), seed++);
      if (rep.points.size() != 3) o.fail(lambda.to_string() + ": fewer than 3 points");
      if (!rep.ok()) o.fail(lambda.to_string() + " (" + formula + "): " + rep.first_failure);
      computed.emplace_back(lambda, p);
    }
  }
  if (o.pass) o.note = std::to_string(shapes.size()) + " shapes, both formulas, 3 points + Schur each";
  return o;
}

Outcome properties(const std::vector<std::pair<Partition, SymFunQT>>& computed) {
  Outcome o;
  const ExecConfig cfg = ExecConfig::from_env();
  std::uint64_t pairs = 0;
  for (const auto& lambda : regular_shapes(4, 3, [](const Partition&) { return true; })) {
    const auto chain = build_chain(lambda);
    for (const auto& w : Permutation::all(lambda.n()))
      for_each_fold_set(chain.size(), [&](std::span<const int> folds) {
        ++pairs;
        try {
          ry_raw_term(w, folds, chain, lambda);
        } catch (const InternalError& e) {
          o.fail(std::string("parity: ") + e.what());
        }
      });
    const MapPropertyReport rep = check_map_properties(lambda, cfg);
    if (!rep.content_identity) o.fail("content identity: " + rep.first_failure);
    if (!rep.ok()) o.fail(lambda.to_string() + ": " + rep.first_failure);
  }
  std::vector<Partition> chain_shapes = table_shapes();
  for (const auto& s : regular_shapes(4, 7, [](const Partition& p) { return p.size() <= 7; }))
    chain_shapes.push_back(s);
  chain_shapes.push_back(Partition::regular({4, 3, 1, 0}, 4));
  std::size_t positions = 0;
  for (const auto& lambda : chain_shapes) {
    const auto chain = build_chain(lambda);
    for (int p = 1; p <= chain.size(); ++p, ++positions) {
      const auto& e = chain.at(p);
      if (e.mult != lambda.arm(e.root.i, e.column - 1))
        o.fail("multiplicity at position " + std::to_string(p) + " of " + lambda.to_string());
    }
  }
  for (const auto& [lambda, p] : computed)
    if (!symmetric_and_monic(p, lambda)) o.fail("symmetry/monicity for " + lambda.to_string());
  if (o.pass)
    o.note = std::to_string(pairs) + " pairs for parity and content, " + std::to_string(positions) +
             " chain positions, " + std::to_string(computed.size()) + " polynomials";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string many =
      std::to_string(std::max(4U, std::thread::hardware_concurrency()));
  std::vector<std::vector<std::string>> commands = {{"table"}};
  for (const auto& lambda : regular_shapes(4, 4, [](const Partition&) { return true; })) {
    std::string text;
    for (int x : lambda.parts()) text += (text.empty() ? "" : ",") + std::to_string(x);
    for (const char* f : {"ram-yip", "compressed"})
      commands.push_back({"compute", "--lambda", text, "--formula", f, "--out", "json"});
  }
  for (const char* l : {"3,2,1,0", "2,1,0", "2,0"})
    commands.push_back({"verify", "--lambda", l, "--per-class"});
  for (const auto& cmd : commands) {
    std::vector<std::string> one{"--threads", "1"};
    std::vector<std::string> max{"--threads", many};
    one.insert(one.end(), cmd.begin(), cmd.end());
    max.insert(max.end(), cmd.begin(), cmd.end());
    const std::string a = cli(one);
    if (a.rfind("exit 0", 0) != 0) o.fail(cmd[0] + " failed: " + a.substr(0, 40));
    if (a != cli(max)) {
      std::string joined;
      for (const auto& s : cmd) joined += s + " ";
      o.fail("output differs between 1 and " + many + " threads: " + joined);
    }
  }
  if (o.pass) o.note = std::to_string(commands.size()) + " commands, 1 vs " + many + " threads";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<Partition, SymFunQT>> computed;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"table reproduction", table_reproduction},
      {"lambda-chain fidelity", chain_fidelity},
      {"worked-example fidelity", worked_example},
      {"cross-formula equality", [&] { return cross_formula(computed); }},
      {"per-class compression", per_class},
      {"closed form for (2,0)", closed_form},
      {"oracle agreement", [&] { return oracle_agreement(computed); }},
      {"property suites", [&] { return properties(computed); }},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    failures += !o.pass;
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << dt.count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << ", " << secs.str() << "s): " << o.note << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
