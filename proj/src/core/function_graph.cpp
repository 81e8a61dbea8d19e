#include "fixpoint/function_graph.hpp"

namespace fixpoint {

FunctionGraph::FunctionGraph(Domain arg, Domain res)
    : arg_(arg), entries_(KeyLess{std::move(arg)}), res_(std::move(res)) {}

const Value& FunctionGraph::lookup(const ArgVec& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? res_.bottom() : it->second;
}

bool FunctionGraph::is_defined(const ArgVec& key) const { return entries_.contains(key); }

FunctionGraph FunctionGraph::updated(const ArgVec& key, Value v) const {
  FunctionGraph copy = *this;
  copy.set(key, std::move(v));
  return copy;
}

void FunctionGraph::set(const ArgVec& key, Value v) { entries_.insert_or_assign(key, std::move(v)); }

bool FunctionGraph::erase(const ArgVec& key) { return entries_.erase(key) > 0; }

bool graph_equal(const FunctionGraph& a, const FunctionGraph& b) {
  if (a.size() != b.size()) return false;
  const Domain& arg = a.arg_domain();
  const Domain& res = a.result_domain();
  for (auto it = a.begin(), jt = b.begin(); it != a.end(); ++it, ++jt) {
    if (!arg.equal(it->first, jt->first) || !res.equal(it->second, jt->second)) return false;
  }
  return true;
}

}  // namespace fixpoint
