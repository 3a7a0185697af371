#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "gk/cocliques.hpp"
#include "gk/numth.hpp"
#include "gk/output.hpp"
#include "gk/refdata.hpp"
#include "gk/sweep.hpp"
#include "gk/torus_oracle.hpp"

// Exit codes: 0 pass, 1 verification mismatch, 2 input error, 3 factorization
// budget exceeded.

namespace {

int run_graph(const std::string& group, const std::string& format, bool explicit_primes) {
  auto spec = gk::parse_spec(group);
  auto g = gk::cocliques::build_graph(spec);
  if (format == "json") std::cout << gk::output::graph_json(g, explicit_primes);
  else if (format == "dot") std::cout << gk::output::graph_dot(g, explicit_primes);
  else std::cout << gk::output::graph_text(g, explicit_primes);
  return 0;
}

int run_coclique(const std::string& group, const std::string& format, bool all) {
  auto spec = gk::parse_spec(group);
  auto rep = gk::cocliques::theta_structure(spec);
  if (format == "json") std::cout << gk::output::report_json(rep, all);
  else std::cout << gk::output::report_text(rep, all);
  return 0;
}

int run_verify(const std::string& table, unsigned n_max, const std::string& q_max, unsigned jobs) {
  if (table == "alt") {
    auto rs = gk::sweep::run_alt(n_max ? n_max : 1000);
    size_t bad = 0;
    for (const auto& r : rs)
      if (!r.ok) {
        ++bad;
        std::cout << "FAIL " << r.group << ": " << r.detail << "\n";
      }
    std::cout << (bad ? "FAIL" : "PASS") << " alternating sweep: " << rs.size() - bad << "/"
              << rs.size() << " degrees match the closed form\n";
    return bad ? 1 : 0;
  }
  gk::sweep::Options opt;
  opt.n_max = n_max;
  opt.q_max = q_max.empty() ? gk::Integer(0) : gk::Integer(q_max);
  opt.jobs = jobs;
  auto rs = gk::sweep::run_table(std::stoi(table), opt);
  size_t bad = 0;
  for (const auto& r : rs) {
    if (r.ok) {
      std::cout << "pass " << r.group << " [" << r.row_id << "]\n";
    } else {
      ++bad;
      std::cout << "FAIL " << r.group << " [" << r.row_id << "]: " << r.detail << "\n";
    }
  }
  std::cout << (bad ? "FAIL" : "PASS") << " table " << table << ": " << rs.size() - bad << "/"
            << rs.size() << " rows match\n";
  return bad ? 1 : 0;
}

int run_oracle(const std::string& group) {
  auto spec = gk::parse_spec(group);
  auto r = gk::sweep::oracle_check(spec);
  std::cout << (r.ok ? "PASS " : "FAIL ") << r.group << ": " << r.detail << "\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gk - Gruenberg-Kegel prime graphs of finite simple groups"};
  app.require_subcommand(1);

  std::string group, format = "text", table, q_max;
  unsigned n_max = 0, jobs = 1;
  bool explicit_primes = false, all = false;

  auto* cg = app.add_subcommand("graph", "emit the compact prime graph of a group");
  cg->add_option("group", group,
                 "group string: FAMILY[:n][:q], e.g. B:4:3, 2A:5:4, E8:7, Alt:19, Spor:M23, Tits")
      ->required();
  cg->add_option("--format", format, "output format: text, json, dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  cg->add_flag("--explicit-primes", explicit_primes, "factor every class into its primes");

  auto* cc = app.add_subcommand("coclique", "maximum cocliques and the Theta/Theta' split");
  cc->add_option("group", group, "group string")->required();
  cc->add_option("--format", format, "output format: text, json")
      ->check(CLI::IsMember({"text", "json"}));
  cc->add_flag("--all", all, "list every maximum coclique");

  auto* cv = app.add_subcommand("verify", "sweep a result table and verify every row");
  cv->add_option("--table", table, "table to verify: 1, 2, 3, 4 or alt")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "4", "alt"}));
  cv->add_option("--n-max", n_max, "rank/degree bound (default: table coverage)");
  cv->add_option("--q-max", q_max, "field size bound (default: 32)");
  cv->add_option("--jobs", jobs, "parallel workers at spec granularity");

  auto* co = app.add_subcommand("oracle", "compare the criterion graph against the torus oracle");
  co->add_option("group", group, "group string (B/C/D/2D/E7/E8/2F4)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cg->parsed()) return run_graph(group, format, explicit_primes);
    if (cc->parsed()) return run_coclique(group, format, all);
    if (cv->parsed()) return run_verify(table, n_max, q_max, jobs);
    if (co->parsed()) return run_oracle(group);
  } catch (const gk::numth::FactorBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (cofactor " << e.cofactor.str()
              << "); raise GK_FACTOR_BUDGET\n";
    return 3;
  } catch (const gk::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
