// fixcalc: command-line front end for the fixpoint toolkit.
//
// Exit codes: 0 success, 2 usage or input error, 3 solver invariant
// violation (solvers disagree, or a functional without upper bounds).

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fixpoint/analyses/first_sets.hpp"
#include "fixpoint/analyses/strictness.hpp"
#include "fixpoint/domain.hpp"
#include "fixpoint/memo.hpp"
#include "parsers.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kInvariant = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demand-driven fixpoint iteration: FIRST sets, strictness, solver benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();

  fixcalc::Options opts;
  bool ascii = false;
  app.add_flag("--ascii", ascii, "ASCII rendering of bottom and epsilon");

  std::string solver = "tdf";
  const auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--solver", solver, "kleene, dep, td, w, tdf or tdf-sub")
        ->check(CLI::IsMember({"kleene", "dep", "td", "w", "tdf", "tdf-sub"}))
        ->capture_default_str();
    sub->add_flag("--stats", opts.stats, "print #rhs and #cmp counters");
  };

  std::string path;
  std::optional<std::string> start;
  std::string query;

  auto* first = app.add_subcommand("first", "FIRST set of a nonterminal");
  first->add_option("grammar", path, "grammar file")->required();
  first->add_option("--start", start, "nonterminal (default: first left-hand side)");
  add_solver(first);

  auto* strict = app.add_subcommand("strict", "strictness of a function at an abstract argument");
  strict->add_option("program", path, "program file")->required();
  strict->add_option("--query", query, "name:b1,b2,... with each b in {0,1}")->required();
  add_solver(strict);

  auto* bench = app.add_subcommand("bench", "FIRST sets of every nonterminal under all solvers");
  bench->add_option("grammar", path, "grammar file")->required();

  auto* hof_demo = app.add_subcommand("hof-demo", "higher-order fixpoint of the CPS example");
  hof_demo->add_flag("--stats", opts.stats, "print evaluation and pass counts");
  auto* osc = app.add_subcommand("demo-oscillate", "naive versus accumulating iteration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  opts.solver = *fixpoint::parse_solver_kind(solver);
  opts.style = ascii ? fixpoint::RenderStyle::ascii : fixpoint::RenderStyle::unicode;

  try {
    std::string out;
    if (first->parsed()) {
      out = fixcalc::cmd_first(path, start, opts);
    } else if (strict->parsed()) {
      out = fixcalc::cmd_strict(path, query, opts);
    } else if (bench->parsed()) {
      out = fixcalc::cmd_bench(path, opts);
    } else if (hof_demo->parsed()) {
      out = fixcalc::cmd_hof_demo(opts);
    } else if (osc->parsed()) {
      out = fixcalc::cmd_demo_oscillate(opts);
    }
    std::cout << out;
    return 0;
  } catch (const fixcalc::InvariantViolation& e) {
    std::cerr << "fixcalc: invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const fixpoint::NoUpperBound& e) {
    std::cerr << "fixcalc: " << e.what() << '\n';
    return kInvariant;
  } catch (const fixpoint::CircularDependency& e) {
    std::cerr << "fixcalc: " << e.what() << '\n';
    return kInvariant;
  } catch (const fixcalc::ParseError& e) {
    std::cerr << "fixcalc: " << path << ":" << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "fixcalc: " << e.what() << '\n';
    return kUsage;
  }
}
