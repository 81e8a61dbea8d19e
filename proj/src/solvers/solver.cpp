#include <stdexcept>

#include "solver_common.hpp"

namespace fixpoint {

Solver::Solver(Domain arg, Domain res, Functional functional)
    : arg_(std::move(arg)), res_(std::move(res)), functional_(std::move(functional)) {}

Value Solver::evaluate(const Query& q, const ArgVec& x) {
  ++stats_.rhs_evals;
  return functional_(q, x);
}

std::string_view solver_label(SolverKind kind) {
  switch (kind) {
    case SolverKind::kleene: return "Kleene";
    case SolverKind::dep: return "Dep";
    case SolverKind::td: return "TD";
    case SolverKind::w: return "W";
    case SolverKind::tdf: return "TDF";
    case SolverKind::tdf_sub: return "TDF-sub";
  }
  return "?";
}

std::string_view solver_flag(SolverKind kind) {
  switch (kind) {
    case SolverKind::kleene: return "kleene";
    case SolverKind::dep: return "dep";
    case SolverKind::td: return "td";
    case SolverKind::w: return "w";
    case SolverKind::tdf: return "tdf";
    case SolverKind::tdf_sub: return "tdf-sub";
  }
  return "?";
}

std::optional<SolverKind> parse_solver_kind(std::string_view flag) {
  for (auto kind : kAllSolverKinds) {
    if (solver_flag(kind) == flag) return kind;
  }
  return std::nullopt;
}

std::unique_ptr<Solver> make_solver(SolverKind kind, Domain arg, Domain res, Functional f,
                                    std::vector<ArgVec> universe) {
  switch (kind) {
    case SolverKind::kleene:
      return fix_kleene(std::move(arg), std::move(res), std::move(f), std::move(universe));
    case SolverKind::dep: return fix_dep(std::move(arg), std::move(res), std::move(f));
    case SolverKind::td: return fix_topdown(std::move(arg), std::move(res), std::move(f));
    case SolverKind::w: return fix_worklist(std::move(arg), std::move(res), std::move(f));
    case SolverKind::tdf: return fix_tdf(std::move(arg), std::move(res), std::move(f));
    case SolverKind::tdf_sub: return fix_tdf_sub(std::move(arg), std::move(res), std::move(f));
  }
  throw std::invalid_argument("unknown solver kind");
}

NeedsRecord record_needs(const Functional& f, const FunctionGraph& graph, const ArgVec& x) {
  detail::ArgSet needs(detail::ArgLess{graph.arg_domain()});
  Query q = [&](const ArgVec& y) -> Value {
    needs.insert(y);
    return graph.lookup(y);
  };
  Value v = f(q, x);
  return {std::move(v), std::vector<ArgVec>(needs.begin(), needs.end())};
}

std::vector<FunctionGraph> partial_iteration(const Functional& f, const Domain& arg,
                                             const Domain& res,
                                             const std::vector<ArgVec>& reevaluate,
                                             std::size_t steps, bool accumulate) {
  std::vector<FunctionGraph> seq;
  seq.reserve(steps + 1);
  seq.emplace_back(arg, res);
  for (std::size_t i = 0; i < steps; ++i) {
    const FunctionGraph& phi = seq.back();
    Query q = [&](const ArgVec& y) { return phi.lookup(y); };
    FunctionGraph next = phi;
    for (const auto& x : reevaluate) {
      Value r = f(q, x);
      next.set(x, accumulate ? res.lub(phi.lookup(x), r) : std::move(r));
    }
    seq.push_back(std::move(next));
  }
  return seq;
}

}  // namespace fixpoint
