#pragma once

#include <cstddef>
#include <map>

#include "fixpoint/domain.hpp"
#include "fixpoint/value.hpp"

namespace fixpoint {

/// Finite tabulation of a function: argument vectors to result values,
/// ordered by the argument domain's total order (lexicographic over the
/// vector). Absent keys read as the result domain's bottom; a key stored
/// with the bottom value still counts as defined.
class FunctionGraph {
  struct KeyLess {
    Domain arg;
    bool operator()(const ArgVec& a, const ArgVec& b) const { return arg.compare(a, b) < 0; }
  };

 public:
  using Map = std::map<ArgVec, Value, KeyLess>;
  using const_iterator = Map::const_iterator;

  FunctionGraph(Domain arg, Domain res);

  const Domain& arg_domain() const { return arg_; }
  const Domain& result_domain() const { return res_; }

  const Value& lookup(const ArgVec& key) const;
  bool is_defined(const ArgVec& key) const;
  /// Persistent update: returns a copy mapping key to v (overwrite, no lub).
  FunctionGraph updated(const ArgVec& key, Value v) const;

  void set(const ArgVec& key, Value v);
  bool erase(const ArgVec& key);
  void clear() { entries_.clear(); }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  const_iterator find(const ArgVec& key) const { return entries_.find(key); }

 private:
  Domain arg_;
  Map entries_;
  Domain res_;
};

/// Entry-wise equality (keys by arg domain, values by result domain).
bool graph_equal(const FunctionGraph& a, const FunctionGraph& b);

}  // namespace fixpoint
