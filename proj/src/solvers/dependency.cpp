// Solvers that maintain an explicit dependency graph: W, TD and Dep.
//
// All three share `sigma_` (current value of every known argument) and
// `infl_` (for each argument, the arguments whose right-hand side read it).
// When a value changes its influenced set is scheduled for re-evaluation and
// cleared; re-evaluation registers the dependencies again.

#include <deque>
#include <map>

#include "solver_common.hpp"

namespace fixpoint {

namespace {

class DependencySolver : public Solver {
 protected:
  DependencySolver(Domain arg, Domain res, Functional f)
      : Solver(std::move(arg), std::move(res), std::move(f)),
        sigma_(empty_graph()),
        infl_(detail::ArgLess{arg_}) {}

 public:
  const FunctionGraph& table() const override { return sigma_; }

 protected:
  detail::ArgSet& influenced(const ArgVec& y) {
    auto it = infl_.find(y);
    if (it == infl_.end()) it = infl_.emplace(y, detail::ArgSet(detail::ArgLess{arg_})).first;
    return it->second;
  }

  detail::ArgSet take_influenced(const ArgVec& y) {
    detail::ArgSet out(detail::ArgLess{arg_});
    if (auto it = infl_.find(y); it != infl_.end()) out.swap(it->second);
    return out;
  }

  /// Joins r into sigma_[x]; true when the stored value changed.
  bool accumulate(const ArgVec& x, const Value& r) {
    const Value& old = sigma_.lookup(x);
    Value next = res_.lub(old, r);
    if (sigma_.is_defined(x) && res_.equal(old, next)) return false;
    sigma_.set(x, std::move(next));
    return true;
  }

  FunctionGraph sigma_;
  std::map<ArgVec, detail::ArgSet, detail::ArgLess> infl_;
};

class WorklistSolver final : public DependencySolver {
 public:
  WorklistSolver(Domain arg, Domain res, Functional f)
      : DependencySolver(std::move(arg), std::move(res), std::move(f)),
        queued_(detail::ArgLess{arg_}),
        query_([this](const ArgVec& y) {
          if (!sigma_.is_defined(y)) {
            sigma_.set(y, res_.bottom());
            enqueue(y);
          }
          influenced(y).insert(*current_);
          return sigma_.lookup(y);
        }) {}

  SolverKind kind() const override { return SolverKind::w; }

  Value query(const ArgVec& x) override {
    if (!sigma_.is_defined(x)) {
      sigma_.set(x, res_.bottom());
      enqueue(x);
      run();
    }
    return sigma_.lookup(x);
  }

 private:
  void enqueue(const ArgVec& x) {
    if (queued_.insert(x).second) queue_.push_back(x);
  }

  void run() {
    ++stats_.passes;
    while (!queue_.empty()) {
      ArgVec x = std::move(queue_.front());
      queue_.pop_front();
      queued_.erase(x);
      current_ = &x;
      Value r = evaluate(query_, x);
      current_ = nullptr;
      if (accumulate(x, r)) {
        for (const auto& d : take_influenced(x)) enqueue(d);
      }
    }
  }

  std::deque<ArgVec> queue_;
  detail::ArgSet queued_;
  const ArgVec* current_ = nullptr;
  Query query_;
};

class TopDownSolver final : public DependencySolver {
 public:
  TopDownSolver(Domain arg, Domain res, Functional f)
      : DependencySolver(std::move(arg), std::move(res), std::move(f)),
        stable_(detail::ArgLess{arg_}) {}

  SolverKind kind() const override { return SolverKind::td; }

  Value query(const ArgVec& x) override {
    if (!stable_.contains(x)) ++stats_.passes;
    solve(x);
    return sigma_.lookup(x);
  }

 private:
  void solve(const ArgVec& x) {
    if (!stable_.insert(x).second) return;
    if (!sigma_.is_defined(x)) sigma_.set(x, res_.bottom());
    Query q = [this, &x](const ArgVec& y) {
      solve(y);
      influenced(y).insert(x);
      return sigma_.lookup(y);
    };
    Value r = evaluate(q, x);
    if (accumulate(x, r)) {
      detail::ArgSet work = take_influenced(x);
      for (const auto& w : work) stable_.erase(w);
      for (const auto& w : work) solve(w);
    }
  }

  detail::ArgSet stable_;
};

class DepSolver final : public DependencySolver {
 public:
  DepSolver(Domain arg, Domain res, Functional f)
      : DependencySolver(std::move(arg), std::move(res), std::move(f)),
        frontier_(detail::ArgLess{arg_}) {}

  SolverKind kind() const override { return SolverKind::dep; }

  Value query(const ArgVec& x) override {
    if (!sigma_.is_defined(x)) {
      sigma_.set(x, res_.bottom());
      frontier_.insert(x);
      run();
    }
    return sigma_.lookup(x);
  }

 private:
  // Each round evaluates the frontier against the values of the previous
  // round; the next frontier is the newly needed arguments plus everything
  // influenced by a change.
  void run() {
    while (!frontier_.empty()) {
      ++stats_.passes;
      detail::ArgSet round(detail::ArgLess{arg_});
      round.swap(frontier_);
      std::vector<std::pair<ArgVec, Value>> results;
      for (const auto& x : round) {
        Query q = [this, &x](const ArgVec& y) {
          if (!sigma_.is_defined(y)) {
            sigma_.set(y, res_.bottom());
            frontier_.insert(y);
          }
          influenced(y).insert(x);
          return sigma_.lookup(y);
        };
        results.emplace_back(x, evaluate(q, x));
      }
      for (const auto& [x, r] : results) {
        if (accumulate(x, r)) {
          for (const auto& d : take_influenced(x)) frontier_.insert(d);
        }
      }
      notify(sigma_);
    }
  }

  detail::ArgSet frontier_;
};

}  // namespace

std::unique_ptr<Solver> fix_worklist(Domain arg, Domain res, Functional f) {
  return std::make_unique<WorklistSolver>(std::move(arg), std::move(res), std::move(f));
}

std::unique_ptr<Solver> fix_topdown(Domain arg, Domain res, Functional f) {
  return std::make_unique<TopDownSolver>(std::move(arg), std::move(res), std::move(f));
}

std::unique_ptr<Solver> fix_dep(Domain arg, Domain res, Functional f) {
  return std::make_unique<DepSolver>(std::move(arg), std::move(res), std::move(f));
}

}  // namespace fixpoint
