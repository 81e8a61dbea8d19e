#include "solver_common.hpp"

namespace fixpoint {

namespace {

// Jacobi-style rounds over the whole universe: every key is re-evaluated
// against the previous round's graph until a round changes nothing. Keys a
// right-hand side asks for that are not yet in the universe join it.
class KleeneSolver final : public Solver {
 public:
  KleeneSolver(Domain arg, Domain res, Functional f, std::vector<ArgVec> universe)
      : Solver(std::move(arg), std::move(res), std::move(f)),
        universe_(detail::ArgLess{arg_}),
        table_(empty_graph()) {
    universe_.insert(universe.begin(), universe.end());
  }

  SolverKind kind() const override { return SolverKind::kleene; }
  const FunctionGraph& table() const override { return table_; }

  Value query(const ArgVec& x) override {
    if (auto it = table_.find(x); it != table_.end()) return it->second;
    universe_.insert(x);
    solve();
    return table_.lookup(x);
  }

 private:
  void solve() {
    FunctionGraph cur = table_;
    for (;;) {
      ++stats_.passes;
      FunctionGraph next = cur;
      std::vector<ArgVec> discovered;
      Query q = [&](const ArgVec& y) -> Value {
        if (!universe_.contains(y)) discovered.push_back(y);
        return cur.lookup(y);
      };
      for (const auto& key : universe_) {
        Value r = evaluate(q, key);
        next.set(key, res_.lub(cur.lookup(key), r));
      }
      bool grew = false;
      for (auto& y : discovered) grew |= universe_.insert(std::move(y)).second;
      notify(next);
      const bool same = graph_equal(cur, next);
      cur = std::move(next);
      if (same && !grew) break;
    }
    table_ = std::move(cur);
  }

  detail::ArgSet universe_;
  FunctionGraph table_;
};

}  // namespace

std::unique_ptr<Solver> fix_kleene(Domain arg, Domain res, Functional f,
                                   std::vector<ArgVec> universe) {
  return std::make_unique<KleeneSolver>(std::move(arg), std::move(res), std::move(f),
                                        std::move(universe));
}

}  // namespace fixpoint
