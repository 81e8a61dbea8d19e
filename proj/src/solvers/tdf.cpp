// Truncated depth-first solvers.
//
// Two graphs are kept: `prev_` holds the values of the last pass and `cur_`
// the values of the pass in progress. A key is entered into `cur_` (seeded
// from `prev_`, or bottom) before its right-hand side runs, so a circular
// request for it returns the seed instead of descending again. Once a query
// stabilises, its graph is merged into `found_` and never re-evaluated.

#include "solver_common.hpp"

namespace fixpoint {

namespace {

class TdfSolver : public Solver {
 public:
  TdfSolver(Domain arg, Domain res, Functional f)
      : Solver(std::move(arg), std::move(res), std::move(f)),
        found_(empty_graph()),
        prev_(empty_graph()),
        cur_(empty_graph()),
        query_([this](const ArgVec& y) { return eval(y); }) {}

  SolverKind kind() const override { return SolverKind::tdf; }
  const FunctionGraph& table() const override { return found_; }

  Value query(const ArgVec& x) override {
    if (auto it = found_.find(x); it != found_.end()) return it->second;
    cur_.clear();
    for (;;) {
      prev_ = std::move(cur_);
      cur_ = empty_graph();
      begin_pass();
      ++stats_.passes;
      eval(x);
      notify(cur_);
      if (stable()) break;
    }
    Value result = cur_.lookup(x);
    for (const auto& [key, val] : cur_) found_.set(key, val);
    return result;
  }

 protected:
  virtual void begin_pass() {}
  virtual bool stable() const { return graph_equal(prev_, cur_); }
  virtual void used(const ArgVec&, const Value&) {}

  Value eval(const ArgVec& x) {
    if (auto it = found_.find(x); it != found_.end()) return it->second;
    if (auto it = cur_.find(x); it != cur_.end()) {
      Value v = it->second;
      used(x, v);
      return v;
    }
    Value seed = prev_.lookup(x);
    cur_.set(x, seed);
    Value r = evaluate(query_, x);
    cur_.set(x, res_.lub(r, seed));
    used(x, r);
    return r;
  }

  FunctionGraph found_;
  FunctionGraph prev_;
  FunctionGraph cur_;
  Query query_;
};

class TdfSubSolver final : public TdfSolver {
 public:
  TdfSubSolver(Domain arg, Domain res, Functional f)
      : TdfSolver(std::move(arg), std::move(res), std::move(f)), used_(empty_graph()) {}

  SolverKind kind() const override { return SolverKind::tdf_sub; }

 private:
  void begin_pass() override {
    used_.clear();
    conflict_ = false;
  }

  // Stop once every value handed out during the pass equals the value the
  // pass finally computed for that argument.
  bool stable() const override {
    if (conflict_) return false;
    for (const auto& [key, val] : used_) {
      auto it = cur_.find(key);
      if (it == cur_.end() || !res_.equal(it->second, val)) return false;
    }
    return true;
  }

  void used(const ArgVec& x, const Value& v) override {
    if (auto it = used_.find(x); it != used_.end()) {
      if (!res_.equal(it->second, v)) conflict_ = true;
      return;
    }
    used_.set(x, v);
  }

  FunctionGraph used_;
  bool conflict_ = false;
};

}  // namespace

std::unique_ptr<Solver> fix_tdf(Domain arg, Domain res, Functional f) {
  return std::make_unique<TdfSolver>(std::move(arg), std::move(res), std::move(f));
}

std::unique_ptr<Solver> fix_tdf_sub(Domain arg, Domain res, Functional f) {
  return std::make_unique<TdfSubSolver>(std::move(arg), std::move(res), std::move(f));
}

}  // namespace fixpoint
