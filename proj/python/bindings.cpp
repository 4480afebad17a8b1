#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "macd/cli.hpp"
#include "macd/compression.hpp"
#include "macd/errors.hpp"
#include "macd/fillings.hpp"
#include "macd/oracle.hpp"
#include "macd/ram_yip.hpp"

namespace py = pybind11;
using namespace macd;

namespace {

Partition shape(const std::vector<int>& parts, int n) {
  return Partition::regular(parts, n > 0 ? n : static_cast<int>(parts.size()));
}

ExecConfig config(unsigned threads) {
  ExecConfig cfg = ExecConfig::from_env();
  if (threads > 0) cfg.threads = threads;
  return cfg;
}

SymFunQT compute_p(const std::vector<int>& parts, int n, const std::string& formula,
                   unsigned threads) {
  const Partition lambda = shape(parts, n);
  if (formula == "ram-yip") return ry_sum(lambda, config(threads));
  if (formula == "compressed") return compressed_sum(lambda, config(threads));
  throw InvalidInput("formula must be 'ram-yip' or 'compressed'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Macdonald polynomials via the Ram-Yip and compressed filling formulas";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceCapExceeded>(m, "ResourceCapExceeded", PyExc_RuntimeError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

  m.def("chain", [](const std::vector<int>& parts, int n) {
    return build_chain(shape(parts, n)).to_string();
  }, py::arg("parts"), py::arg("n") = 0);

  m.def("chain_entries", [](const std::vector<int>& parts, int n) {
    std::vector<std::tuple<int, int, int, int>> out;
    for (const auto& e : build_chain(shape(parts, n)).entries())
      out.emplace_back(e.root.i, e.root.k, e.column, e.mult);
    return out;
  }, py::arg("parts"), py::arg("n") = 0, "(i, k, column, multiplicity) per chain position");

  m.def("compute", [](const std::vector<int>& parts, int n, const std::string& formula,
                      unsigned threads) {
    const SymFunQT p = compute_p(parts, n, formula, threads);
    py::dict out;
    for (const auto& [c, coef] : p.terms())
      out[py::tuple(py::cast(c))] = coef.to_string();
    return out;
  }, py::arg("parts"), py::arg("n") = 0, py::arg("formula") = "compressed", py::arg("threads") = 0,
        "Coefficient text per content vector");

  m.def("compute_json", [](const std::vector<int>& parts, int n, const std::string& formula,
                           unsigned threads) {
    return symfun_to_json(compute_p(parts, n, formula, threads), shape(parts, n));
  }, py::arg("parts"), py::arg("n") = 0, py::arg("formula") = "compressed", py::arg("threads") = 0);

  m.def("count", [](const std::vector<int>& parts, int n, const std::string& convention) {
    const Partition lambda = shape(parts, n);
    if (convention == "ram-yip") return folding_pair_count(build_chain(lambda).size(), lambda.n());
    if (convention == "hhl") return count_nonattacking(lambda, AttackConvention::hhl, config(0));
    if (convention == "paper") return count_nonattacking(lambda, AttackConvention::paper, config(0));
    throw InvalidInput("convention must be 'paper', 'hhl' or 'ram-yip'");
  }, py::arg("parts"), py::arg("n") = 0, py::arg("convention") = "paper");

  m.def("classify_folds", [](const std::string& w, const std::vector<int>& folds,
                             const std::vector<int>& parts, int n) {
    const auto c = classify_folds(Permutation::parse(w), folds, build_chain(shape(parts, n)));
    std::vector<std::string> chain;
    for (const auto& p : c.chain) chain.push_back(p.to_string());
    return py::dict(py::arg("chain") = chain, py::arg("plus") = c.plus, py::arg("minus") = c.minus);
  }, py::arg("w"), py::arg("folds"), py::arg("parts"), py::arg("n") = 0);

  m.def("filling_map", [](const std::string& w, const std::vector<int>& folds,
                          const std::vector<int>& parts, int n) {
    const Partition lambda = shape(parts, n);
    return filling_map(Permutation::parse(w), folds, build_chain(lambda), lambda).to_string();
  }, py::arg("w"), py::arg("folds"), py::arg("parts"), py::arg("n") = 0,
        "Filling rows top to bottom, each listed from its longest column down to column 1");

  m.def("verify_classes", [](const std::vector<int>& parts, int n, unsigned threads) {
    const CompressionReport rep = verify_all_classes(shape(parts, n), config(threads));
    const ClassCheck* bad = rep.first_failure();
    return py::dict(py::arg("ok") = rep.ok(), py::arg("classes") = rep.classes.size(),
                    py::arg("passed") = rep.passed(), py::arg("folding_pairs") = rep.folding_pairs,
                    py::arg("fibers_partition") = rep.fibers_partition,
                    py::arg("first_failure") = bad ? bad->detail : std::string());
  }, py::arg("parts"), py::arg("n") = 0, py::arg("threads") = 0);

  m.def("check_oracle", [](const std::vector<int>& parts, int n, std::uint64_t seed,
                           const std::string& formula) {
    const Partition lambda = shape(parts, n);
    const auto rep = check_specializations(compute_p(parts, n, formula, 0), lambda, lambda.n(), seed);
    return py::dict(py::arg("ok") = rep.ok(), py::arg("symmetric") = rep.symmetric,
                    py::arg("monic") = rep.monic, py::arg("oracle_agrees") = rep.oracle_agrees,
                    py::arg("schur_agrees") = rep.schur_agrees,
                    py::arg("first_failure") = rep.first_failure);
  }, py::arg("parts"), py::arg("n") = 0, py::arg("seed") = 1, py::arg("formula") = "compressed");

  m.def("table", [](unsigned threads) {
    py::list rows;
    for (const auto& lambda : table_shapes()) {
      const TableRow r = compute_table_row(lambda, false, config(threads));
      rows.append(py::dict(py::arg("lambda") = std::vector<int>(lambda.parts().begin(), lambda.parts().end()),
                           py::arg("n") = lambda.n(), py::arg("m") = r.chain_length,
                           py::arg("t") = r.t_count, py::arg("hhl") = r.hhl_count,
                           py::arg("c") = format_tenths(r.c_tenths),
                           py::arg("r") = format_tenths(r.r_tenths)));
    }
    return rows;
  }, py::arg("threads") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr)");
}
