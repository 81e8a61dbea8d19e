#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "fixpoint/domain.hpp"
#include "fixpoint/function_graph.hpp"

namespace fixpoint {

/// Recursive query handed to a functional: the current approximation of the
/// function being solved for.
using Query = std::function<Value(const ArgVec&)>;

/// A second-order functional G, written as G(f, x). It must be
/// pseudo-monotonic; otherwise solvers may throw NoUpperBound or fail to
/// terminate.
using Functional = std::function<Value(const Query&, const ArgVec&)>;

struct SolverStats {
  std::uint64_t rhs_evals = 0;  // invocations of the functional, confirming passes included
  std::uint64_t cmp_count = 0;  // filled by callers that instrument the domains
  std::uint64_t passes = 0;     // outer iterations / rounds, where the strategy has them
};

enum class SolverKind { kleene, dep, td, w, tdf, tdf_sub };

inline constexpr std::array<SolverKind, 6> kAllSolverKinds = {
    SolverKind::kleene, SolverKind::dep, SolverKind::td,
    SolverKind::w,      SolverKind::tdf, SolverKind::tdf_sub};

/// Display name, e.g. "TDF-sub".
std::string_view solver_label(SolverKind kind);
/// Command-line name, e.g. "tdf-sub".
std::string_view solver_flag(SolverKind kind);
std::optional<SolverKind> parse_solver_kind(std::string_view flag);

/// A solved function: queries return least-fixpoint values and are memoized,
/// so repeated queries reuse the tabulation built by earlier ones.
///
/// Solvers are single-threaded and hold internal state referring to
/// themselves, hence they are neither copyable nor movable.
class Solver {
 public:
  /// Called after every outer pass or round with the working graph.
  using PassObserver = std::function<void(const FunctionGraph&)>;

  virtual ~Solver() = default;
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  Value operator()(const ArgVec& x) { return query(x); }
  virtual Value query(const ArgVec& x) = 0;

  /// Every argument solved so far with its fixpoint value.
  virtual const FunctionGraph& table() const = 0;

  virtual SolverKind kind() const = 0;
  const SolverStats& stats() const { return stats_; }
  void set_pass_observer(PassObserver observer) { observer_ = std::move(observer); }

  const Domain& arg_domain() const { return arg_; }
  const Domain& result_domain() const { return res_; }

 protected:
  Solver(Domain arg, Domain res, Functional functional);

  Value evaluate(const Query& q, const ArgVec& x);
  void notify(const FunctionGraph& g) const {
    if (observer_) observer_(g);
  }
  FunctionGraph empty_graph() const { return FunctionGraph(arg_, res_); }

  Domain arg_;
  Domain res_;
  Functional functional_;
  SolverStats stats_;
  PassObserver observer_;
};

/// Truncated depth-first iteration: evaluate depth-first, cut circular
/// descent by reusing the previous pass's value (or bottom), repeat passes
/// until two consecutive graphs agree.
std::unique_ptr<Solver> fix_tdf(Domain arg, Domain res, Functional f);

/// TDF that also records every value handed to the functional and stops
/// once those used values are a subgraph of the computed graph. A single
/// pass suffices for non-circular dependencies.
std::unique_ptr<Solver> fix_tdf_sub(Domain arg, Domain res, Functional f);

/// Breadth-first full tabulation over `universe` (extended with any needs
/// discovered on the way). Reference strategy for the others.
std::unique_ptr<Solver> fix_kleene(Domain arg, Domain res, Functional f,
                                   std::vector<ArgVec> universe = {});

/// Change-propagation worklist with recorded dependencies (FIFO).
std::unique_ptr<Solver> fix_worklist(Domain arg, Domain res, Functional f);

/// Top-down solver: depth-first with local fixpoints and selective
/// invalidation of influenced arguments.
std::unique_ptr<Solver> fix_topdown(Domain arg, Domain res, Functional f);

/// Neededness-based rounds: breadth-first, but each round re-evaluates only
/// arguments whose dependencies changed.
std::unique_ptr<Solver> fix_dep(Domain arg, Domain res, Functional f);

/// `universe` is only consulted by the Kleene strategy.
std::unique_ptr<Solver> make_solver(SolverKind kind, Domain arg, Domain res, Functional f,
                                    std::vector<ArgVec> universe = {});

struct NeedsRecord {
  Value value;
  std::vector<ArgVec> needs;  // sorted by the graph's argument order, no duplicates
};

/// Evaluates f(query, x) with queries answered from `graph`, recording every
/// argument queried.
NeedsRecord record_needs(const Functional& f, const FunctionGraph& graph, const ArgVec& x);

/// The partial iteration sequence phi_0 .. phi_steps, where phi_0 is the empty
/// graph and phi_{i+1} re-evaluates the keys in `reevaluate` against phi_i:
/// either replacing the value (accumulate = false) or joining it in.
std::vector<FunctionGraph> partial_iteration(const Functional& f, const Domain& arg,
                                             const Domain& res,
                                             const std::vector<ArgVec>& reevaluate,
                                             std::size_t steps, bool accumulate);

}  // namespace fixpoint
