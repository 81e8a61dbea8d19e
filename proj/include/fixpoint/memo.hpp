#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>

#include "fixpoint/solvers.hpp"

namespace fixpoint {

/// Thrown by memo_fix when a query depends on itself. Circular systems need
/// one of the fixpoint solvers instead.
class CircularDependency : public std::runtime_error {
 public:
  explicit CircularDependency(const ArgVec& at);
};

/// Memoized wrapper around a pure first-order function. Copies share the
/// memo table.
class Memo {
 public:
  using Fn = std::function<Value(const ArgVec&)>;

  explicit Memo(Fn f);

  Value operator()(const ArgVec& x) const;
  /// Number of times the wrapped function actually ran.
  std::uint64_t evaluations() const { return state_->evaluations; }

 private:
  struct State {
    Fn f;
    std::map<ArgVec, Value> table;
    std::uint64_t evaluations = 0;
  };
  std::shared_ptr<State> state_;
};

Memo memo(Memo::Fn f);

/// Recursive closure of a functional with every internal call memoized.
/// Only well-founded recursion is supported.
class MemoFix {
 public:
  explicit MemoFix(Functional f);

  Value operator()(const ArgVec& x) const;
  std::uint64_t evaluations() const { return state_->evaluations; }

 private:
  struct State {
    Functional f;
    Query self;
    std::map<ArgVec, std::optional<Value>> table;  // nullopt while in progress
    std::uint64_t evaluations = 0;
  };
  std::shared_ptr<State> state_;
};

MemoFix memo_fix(Functional f);

}  // namespace fixpoint
