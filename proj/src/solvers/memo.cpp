#include "fixpoint/memo.hpp"

namespace fixpoint {

CircularDependency::CircularDependency(const ArgVec& at)
    : std::runtime_error("circular dependency at " + to_string(at)) {}

Memo::Memo(Fn f) : state_(std::make_shared<State>()) { state_->f = std::move(f); }

Value Memo::operator()(const ArgVec& x) const {
  if (auto it = state_->table.find(x); it != state_->table.end()) return it->second;
  ++state_->evaluations;
  Value v = state_->f(x);
  state_->table.emplace(x, v);
  return v;
}

Memo memo(Memo::Fn f) { return Memo(std::move(f)); }

MemoFix::MemoFix(Functional f) : state_(std::make_shared<State>()) {
  state_->f = std::move(f);
  // Weak capture: the state owns this closure.
  state_->self = [weak = std::weak_ptr<State>(state_)](const ArgVec& y) {
    auto st = weak.lock();
    auto it = st->table.find(y);
    if (it != st->table.end()) {
      if (!it->second) throw CircularDependency(y);
      return *it->second;
    }
    st->table.emplace(y, std::nullopt);
    ++st->evaluations;
    Value v;
    try {
      v = st->f(st->self, y);
    } catch (...) {
      st->table.erase(y);
      throw;
    }
    st->table[y] = v;
    return v;
  };
}

Value MemoFix::operator()(const ArgVec& x) const { return state_->self(x); }

MemoFix memo_fix(Functional f) { return MemoFix(std::move(f)); }

}  // namespace fixpoint
