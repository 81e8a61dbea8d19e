// Acceptance checks, one line per criterion:
//   PASS|FAIL  <n>  <title>  (<elapsed> ms, limit <limit> ms)  [detail]
// Exit status is nonzero when any criterion fails or runs over its limit.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "domain_samples.hpp"
#include "fixpoint/analyses/demos.hpp"
#include "fixpoint/analyses/first_sets.hpp"
#include "fixpoint/analyses/strictness.hpp"
#include "fixpoint/memo.hpp"
#include "fixpoint/solvers.hpp"
#include "oracles.hpp"

using namespace fixpoint;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome pass(std::string d = {}) { return {true, std::move(d)}; }
Outcome fail(std::string d) { return {false, std::move(d)}; }

std::string run_fixcalc(const std::string& args, int& status) {
  const std::string cmd = std::string(FIXCALC_PATH) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int raw = pclose(p);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

Value N(std::uint64_t n) { return Value::nat(n); }
ArgVec K(std::uint64_t n) { return {N(n)}; }

// ---------------------------------------------------------------------------

Outcome hof_demo() {
  int status = 0;
  const auto lines = lines_of(run_fixcalc("hof-demo", status));
  if (status != 0) return fail("exit status " + std::to_string(status));
  const std::vector<std::string> expected{
      "ft: [1] => (1, [])",
      "g: [1,{[1]->1}] => (1, [[],[[1]]])",
      "m: [1,{[1]->1},1] => (1, [[],[[1]],[]])",
      "top: [1] => (1, [])",
      "ft [1] = 1",
  };
  if (lines != expected) {
    std::string got;
    for (const auto& l : lines) got += l + " | ";
    return fail("output: " + got);
  }
  return pass("4 entries, result 1");
}

Outcome oscillation() {
  const Domain nat = make_nat_domain();
  const Functional G = analyses::oscillation_fixture();
  const auto naive = partial_iteration(G, nat, nat, {K(1)}, 4, false);
  std::vector<std::uint64_t> trace;
  for (const auto& g : naive) trace.push_back(g.lookup(K(1)).as_nat());
  if (trace.size() < 4 || !std::equal(trace.begin(), trace.begin() + 4,
                                      std::vector<std::uint64_t>{0, 1, 2, 1}.begin())) {
    return fail("naive trace does not start 0,1,2,1");
  }

  // Kleene chain over the whole carrier, written out independently:
  // theta(x) <- min(theta(theta(x)) + 1, 2).
  std::array<std::uint64_t, 3> theta{0, 0, 0};
  for (bool changed = true; changed;) {
    std::array<std::uint64_t, 3> next{};
    for (std::size_t x = 0; x < 3; ++x) next[x] = std::min<std::uint64_t>(theta[theta[x]] + 1, 2);
    changed = next != theta;
    theta = next;
  }

  auto tdf = fix_tdf(nat, nat, G);
  const auto v = tdf->query(K(1)).as_nat();
  auto kleene = fix_kleene(nat, nat, G, {K(0), K(1), K(2)});
  const auto k = kleene->query(K(1)).as_nat();
  if (v != theta[1] || k != theta[1] || v != 2) {
    return fail("tdf " + std::to_string(v) + ", kleene " + std::to_string(k) + ", oracle " +
                std::to_string(theta[1]));
  }
  return pass("naive 0,1,2,1; tdf 2 = oracle 2");
}

Outcome first_sets() {
  using namespace analyses;
  const Grammar g = expression_grammar();
  const auto closure = oracle::first_closure(g);
  const std::set<std::string> expected{"(", "name", "number"};
  FirstSets first(g);
  const auto e = first("exp");
  const auto evals = first.solver().stats().rhs_evals;
  for (const char* nt : {"exp", "term", "factor"}) {
    const auto got = first(nt);
    if (std::set<std::string>(got.begin(), got.end()) != expected || closure.at(nt) != expected) {
      return fail(std::string("first(") + nt + ") mismatch");
    }
  }
  const auto extra = first.solver().stats().rhs_evals - evals;
  if (extra != 0) return fail(std::to_string(extra) + " rhs evaluations after the first query");
  return pass("3 nonterminals, 0 extra rhs evaluations");
}

Outcome solver_agreement() {
  oracle::Rng rng(20240601);
  constexpr int kSystems = 150;
  for (int n = 0; n < kSystems; ++n) {
    const oracle::System sys = oracle::random_system(rng);
    const auto lib = oracle::to_library(sys);
    auto reference = fix_kleene(lib.arg, lib.res, lib.functional, lib.universe);
    std::vector<Value> ref;
    for (int k = 0; k < sys.keys; ++k) ref.push_back(reference->query(oracle::key(k)));
    const auto brute = sys.lfp();
    for (int k = 0; k < sys.keys; ++k) {
      if (oracle::from_value(sys.lattice, ref[k]) != brute[k]) {
        return fail("fix_kleene disagrees with brute force, system " + std::to_string(n));
      }
    }
    for (auto kind : kAllSolverKinds) {
      auto s = make_solver(kind, lib.arg, lib.res, lib.functional, lib.universe);
      std::vector<int> order(sys.keys);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int k : order) {
        if (!(s->query(oracle::key(k)) == ref[k])) {
          return fail(std::string(solver_label(kind)) + " differs on system " + std::to_string(n));
        }
      }
    }
  }
  return pass(std::to_string(kSystems) + " systems x 6 solvers");
}

Outcome bench_shape() {
  int status = 0;
  const auto lines = lines_of(run_fixcalc(std::string("bench ") + DATA_DIR + "/expr.grammar", status));
  if (status != 0) return fail("exit status " + std::to_string(status));
  struct Row {
    std::string name;
    long cmp, rhs;
  };
  std::vector<Row> rows;
  for (const auto& l : lines) {
    std::istringstream is(l);
    Row r;
    if (is >> r.name >> r.cmp >> r.rhs) rows.push_back(r);
  }
  const std::vector<std::string> order{"Kleene", "Dep", "TD", "W", "TDF", "TDF-sub"};
  if (rows.size() != order.size()) return fail(std::to_string(rows.size()) + " rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].name != order[i]) return fail("row " + std::to_string(i) + " is " + rows[i].name);
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].rhs >= rows[0].rhs) return fail(rows[i].name + " #rhs not below Kleene");
  }
  if (rows[4].cmp >= rows[0].cmp) return fail("TDF #cmp not below Kleene");
  // agreement: bench itself aborts with status 3 on disagreement
  return pass("Kleene #rhs " + std::to_string(rows[0].rhs) + " largest; TDF #cmp " +
              std::to_string(rows[4].cmp) + " < Kleene " + std::to_string(rows[0].cmp));
}

Outcome memoization() {
  const Functional fib = [](const Query& q, const ArgVec& x) {
    const auto n = x[0].as_nat();
    if (n < 2) return N(1);
    return N(q(K(n - 1)).as_nat() + q(K(n - 2)).as_nat());
  };
  const std::function<std::uint64_t(std::uint64_t)> direct = [&](std::uint64_t n) -> std::uint64_t {
    return n < 2 ? 1 : direct(n - 1) + direct(n - 2);
  };
  MemoFix m = memo_fix(fib);
  const auto v = m(K(20)).as_nat();
  if (v != 10946 || v != direct(20)) return fail("memo_fix(20) = " + std::to_string(v));
  if (m.evaluations() != 21) return fail(std::to_string(m.evaluations()) + " memo_fix evaluations");

  auto sub = fix_tdf_sub(make_nat_domain(), make_nat_domain(), fib);
  if (sub->query(K(20)).as_nat() != 10946) return fail("tdf-sub value");
  if (sub->stats().rhs_evals != 21 || sub->stats().passes != 1) {
    return fail("tdf-sub " + std::to_string(sub->stats().rhs_evals) + " evaluations, " +
                std::to_string(sub->stats().passes) + " passes");
  }
  return pass("10946 with 21 evaluations; tdf-sub 21 evaluations, 1 pass");
}

Outcome strictness() {
  using namespace analyses;
  const Expr x = Expr::param("x"), y = Expr::param("y"), z = Expr::param("z");
  const Program sum({{"f", {"x", "y"}, Expr::add(x, y)}});
  const Program cond({{"g", {"x", "y", "z"}, Expr::cond(x, y, z)}});
  const Program swap({{"f", {"x", "y"}, Expr::cond(x, y, Expr::call("f", {y, x}))}});

  struct Case {
    const Program* p;
    std::string fn;
    std::vector<AbstractValue> args;
    AbstractValue expected;
  };
  const std::vector<Case> cases{
      {&sum, "f", {0, 1}, 0},      {&sum, "f", {1, 0}, 0},      {&cond, "g", {0, 1, 1}, 0},
      {&cond, "g", {1, 0, 1}, 1},  {&cond, "g", {1, 1, 0}, 1},  {&swap, "f", {0, 1}, 0},
      {&swap, "f", {1, 1}, 1},
  };
  for (const auto& c : cases) {
    const oracle::StrictnessTable table(*c.p);
    StrictnessAnalysis s(*c.p);
    const auto got = s(c.fn, c.args);
    if (got != c.expected || static_cast<int>(got) != table.at(c.fn, c.args)) {
      return fail(c.fn + " gives " + std::to_string(got));
    }
  }
  return pass(std::to_string(cases.size()) + " queries match full tabulation");
}

Outcome domain_laws() {
  constexpr int kCases = 1200;
  std::string counts;
  for (const auto& c : samples::all_carriers()) {
    std::mt19937_64 rng(0xacce97 + c.elements.size());
    std::uniform_int_distribution<std::size_t> pick(0, c.elements.size() - 1);
    for (int n = 0; n < kCases; ++n) {
      const Value& a = c.elements[pick(rng)];
      const Value& b = c.elements[pick(rng)];
      const Value& x = c.elements[pick(rng)];
      if (!samples::check_laws(c.domain, c.elements, a, b, x)) {
        return fail(c.name + ": " + samples::failure_report(c.domain, a, b, x));
      }
    }
    counts += (counts.empty() ? "" : ", ") + c.name;
  }
  return pass(std::to_string(kCases) + " cases each: " + counts);
}

Outcome externalization() {
  oracle::Rng rng(909);
  int checked = 0;
  for (int n = 0; n < 200; ++n) {
    const oracle::System sys = oracle::random_system(rng);
    const auto lib = oracle::to_library(sys);
    FunctionGraph f(lib.arg, lib.res);
    for (int k = 0; k < sys.keys; ++k) {
      if (oracle::uniform(rng, 0, 2)) {
        f.set(oracle::key(k), oracle::to_value(sys.lattice, oracle::uniform(rng, 0, sys.top())));
      }
    }
    const ArgVec x = oracle::key(oracle::uniform(rng, 0, sys.keys - 1));
    const NeedsRecord rec = record_needs(lib.functional, f, x);
    FunctionGraph g = f;
    for (int k = 0; k < sys.keys; ++k) {
      if (std::find(rec.needs.begin(), rec.needs.end(), oracle::key(k)) != rec.needs.end()) continue;
      if (oracle::uniform(rng, 0, 1)) {
        g.erase(oracle::key(k));
      } else {
        g.set(oracle::key(k), oracle::to_value(sys.lattice, oracle::uniform(rng, 0, sys.top())));
      }
    }
    const Value v = lib.functional([&](const ArgVec& y) { return g.lookup(y); }, x);
    if (!(v == rec.value)) return fail("sample " + std::to_string(n) + " changed");
    ++checked;
  }
  return pass(std::to_string(checked) + " perturbed samples unchanged");
}

struct Criterion {
  int id;
  const char* title;
  long limit_ms;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "higher-order demo tabulation", 1000, hof_demo},
      {2, "oscillation: naive trace and accumulating fixpoint", 1000, oscillation},
      {3, "FIRST sets of the expression grammar, memoized", 1000, first_sets},
      {4, "six solvers agree with Kleene on random systems", 30000, solver_agreement},
      {5, "benchmark shape", 5000, bench_shape},
      {6, "memoization counts", 1000, memoization},
      {7, "strictness fixtures", 1000, strictness},
      {8, "domain laws for every combinator", 30000, domain_laws},
      {9, "needs externalization", 10000, externalization},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && ms > c.limit_ms) o = fail("over time limit");
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "  (" << ms
              << " ms, limit " << c.limit_ms << " ms)  " << o.detail << '\n';
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << '\n';
  return failures == 0 ? 0 : 1;
}
