#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "fixpoint/analyses/demos.hpp"
#include "fixpoint/analyses/first_sets.hpp"
#include "fixpoint/analyses/strictness.hpp"
#include "fixpoint/hof.hpp"
#include "parsers.hpp"

namespace fixcalc {

using namespace fixpoint;
using analyses::FirstSets;
using analyses::Grammar;

namespace {

std::string render_first(const std::string& nt, const std::vector<std::string>& terms,
                         RenderStyle style) {
  std::ostringstream os;
  os << "first(" << nt << ") = {";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    os << (i ? ", " : " ");
    if (terms[i] == analyses::kEpsilon) {
      os << (style == RenderStyle::ascii ? "eps" : "ε");
    } else {
      os << '"' << terms[i] << '"';
    }
  }
  os << (terms.empty() ? "}" : " }") << '\n';
  return os.str();
}

std::string render_stats(const SolverStats& s, std::uint64_t cmp) {
  return "#rhs=" + std::to_string(s.rhs_evals) + " #cmp=" + std::to_string(cmp) + "\n";
}

std::vector<analyses::AbstractValue> parse_bits(const std::string& text) {
  std::vector<analyses::AbstractValue> bits;
  if (text.empty()) return bits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "0" && item != "1") {
      throw UsageError("malformed query: argument '" + item + "' is not 0 or 1");
    }
    bits.push_back(item == "1" ? 1 : 0);
  }
  if (text.back() == ',') throw UsageError("malformed query: trailing ','");
  return bits;
}

}  // namespace

std::string cmd_first(const std::string& grammar_path, const std::optional<std::string>& start,
                      const Options& opts) {
  Grammar g = parse_grammar(read_file(grammar_path));
  std::string nt = start ? *start : g.productions().front().lhs;
  if (!g.has_nonterminal(nt)) throw UsageError("unknown nonterminal '" + nt + "'");
  auto counter = std::make_shared<ComparisonCounter>(0);
  FirstSets first(g, opts.solver, instrument(make_flat_string_domain(), counter));
  std::string out = render_first(nt, first(nt), opts.style);
  if (opts.stats) out += render_stats(first.solver().stats(), counter->load());
  return out;
}

std::string cmd_strict(const std::string& program_path, const std::string& query,
                       const Options& opts) {
  auto colon = query.find(':');
  if (colon == std::string::npos || colon == 0) {
    throw UsageError("malformed query '" + query + "', expected name:b1,b2,...");
  }
  const std::string fn = query.substr(0, colon);
  const auto bits = parse_bits(query.substr(colon + 1));

  analyses::Program p = parse_program(read_file(program_path));
  const analyses::FunctionDef* def = p.find(fn);
  if (!def) throw UsageError("unknown function '" + fn + "'");
  if (def->params.size() != bits.size()) {
    throw UsageError(fn + " takes " + std::to_string(def->params.size()) + " argument(s), query has " +
                     std::to_string(bits.size()));
  }
  auto counter = std::make_shared<ComparisonCounter>(0);
  analyses::StrictnessAnalysis strict(p, opts.solver, counter);
  const auto r = strict(fn, bits);

  std::ostringstream os;
  os << "strict(" << fn << ", [";
  for (std::size_t i = 0; i < bits.size(); ++i) os << (i ? "," : "") << bits[i];
  os << "]) = " << r << '\n';
  if (std::count(bits.begin(), bits.end(), 0U) == 1) {
    const auto i = static_cast<std::size_t>(std::find(bits.begin(), bits.end(), 0U) - bits.begin());
    os << fn << " is " << (r == 0 ? "strict" : "not strict") << " in parameter " << i << '\n';
  }
  std::string out = os.str();
  if (opts.stats) out += render_stats(strict.solver().stats(), counter->load());
  return out;
}

std::string cmd_bench(const std::string& grammar_path, const Options& opts) {
  Grammar g = parse_grammar(read_file(grammar_path));
  const auto nts = g.nonterminals();

  struct Row {
    SolverKind kind;
    std::uint64_t cmp, rhs;
    std::map<std::string, Value> result;
  };
  std::vector<Row> rows;
  for (SolverKind kind : kAllSolverKinds) {
    auto counter = std::make_shared<ComparisonCounter>(0);
    FirstSets first(g, kind, instrument(make_flat_string_domain(), counter));
    Row row{kind, 0, 0, {}};
    for (const auto& nt : nts) row.result.emplace(nt, first.raw(nt));
    row.cmp = counter->load();
    row.rhs = first.solver().stats().rhs_evals;
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    for (const auto& [nt, v] : row.result) {
      const Value& ref = rows.front().result.at(nt);
      if (v != ref) {
        throw InvariantViolation(std::string(solver_label(row.kind)) + " disagrees with " +
                                 std::string(solver_label(rows.front().kind)) + " at " + nt +
                                 ": " + to_string(v, opts.style) + " vs " +
                                 to_string(ref, opts.style));
      }
    }
  }

  std::ostringstream os;
  os << std::left << std::setw(10) << "Method" << std::right << std::setw(10) << "#cmp"
     << std::setw(8) << "#rhs" << '\n';
  for (const auto& row : rows) {
    os << std::left << std::setw(10) << solver_label(row.kind) << std::right << std::setw(10)
       << row.cmp << std::setw(8) << row.rhs << '\n';
  }
  os << "\nAll " << nts.size() << " nonterminals queried; all " << rows.size()
     << " solvers agree.\n"
     << "#cmp: leq/equal/compare calls on string values, graph key lookups included.\n"
     << "#rhs: evaluations of the functional, confirming passes included.\n";
  return os.str();
}

std::string cmd_hof_demo(const Options& opts) {
  using hof::HValue;
  hof::HofFixpoint f = hof::hof_fix(analyses::cps_demo_functional());
  HValue r = f({HValue::str("ft"), HValue::nat(1)});
  std::string out = hof::render_table(f.table(), true, opts.style);
  out += "ft [1] = " + hof::render(hof::v2r(r), opts.style) + "\n";
  if (opts.stats) {
    out += "#evals=" + std::to_string(f.stats().evaluations) +
           " #passes=" + std::to_string(f.stats().passes) + "\n";
  }
  return out;
}

std::string cmd_demo_oscillate(const Options& opts) {
  const Domain nat = analyses::oscillation_domain();
  const Domain graphs = make_graph_domain(nat, nat);
  const Functional G = analyses::oscillation_fixture();
  const ArgVec one{Value::nat(1)};
  std::ostringstream os;

  os << "G phi x = phi(phi(x)) + 1 (capped at 2), x = 1\n\n";
  os << "naive iteration, phi_{i+1} x = G phi_i x:\n";
  constexpr std::size_t kMaxSteps = 10;
  auto seq = partial_iteration(G, nat, nat, {one}, kMaxSteps, false);
  std::size_t shown = seq.size();
  std::optional<std::pair<std::size_t, std::size_t>> cycle;
  for (std::size_t i = 1; i < seq.size() && !cycle; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (graph_equal(seq[i], seq[j])) {
        cycle = {j, i};
        shown = std::min(seq.size(), i + 2);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < shown; ++i) {
    os << "  phi_" << i << "(1) = " << nat.render(seq[i].lookup(one), opts.style) << '\n';
  }
  if (cycle) {
    os << "  cycle detected: phi_" << cycle->second << " = phi_" << cycle->first << ", period "
       << cycle->second - cycle->first << "\n";
  }

  os << "\naccumulating TDF, phi x := phi x lub G phi x:\n";
  auto tdf = fix_tdf(nat, nat, G);
  std::size_t pass = 0;
  tdf->set_pass_observer([&](const FunctionGraph& g) {
    os << "  pass " << ++pass << ": " << graphs.render(Value::graph(g), opts.style) << '\n';
  });
  Value v = tdf->query(one);
  os << "  fix = " << nat.render(v, opts.style) << '\n';

  auto kleene = fix_kleene(nat, nat, G, {{Value::nat(0)}, {Value::nat(1)}, {Value::nat(2)}});
  Value oracle = kleene->query(one);
  if (!nat.equal(v, oracle)) {
    throw InvariantViolation("TDF gives " + nat.render(v) + " but Kleene gives " + nat.render(oracle));
  }
  os << "\nlfp G (1) = " << nat.render(oracle, opts.style) << '\n';
  return os.str();
}

}  // namespace fixcalc
