#pragma once

// Small finite carriers for every combinator, enumerated completely so that
// "all upper bounds" can be checked exhaustively, plus the law checker.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixpoint/domain.hpp"
#include "fixpoint/function_graph.hpp"

namespace samples {

using fixpoint::Domain;
using fixpoint::Value;

struct Carrier {
  std::string name;
  Domain domain;
  std::vector<Value> elements;
};

inline std::vector<Value> sequences(const std::vector<Value>& atoms, std::size_t max_len) {
  std::vector<Value> out{Value::seq({})};
  std::vector<std::vector<Value>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Value>> next;
    for (const auto& prefix : layer) {
      for (const auto& a : atoms) {
        auto v = prefix;
        v.push_back(a);
        out.push_back(Value::seq(v));
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Every partial map from `keys` to `results`.
inline std::vector<Value> graphs(const Domain& arg, const Domain& res, const std::vector<Value>& keys,
                                 const std::vector<Value>& results) {
  std::vector<fixpoint::FunctionGraph> acc{fixpoint::FunctionGraph(arg, res)};
  for (const auto& k : keys) {
    std::vector<fixpoint::FunctionGraph> next;
    for (const auto& g : acc) {
      next.push_back(g);
      for (const auto& r : results) next.push_back(g.updated({k}, r));
    }
    acc = std::move(next);
  }
  std::vector<Value> out;
  for (auto& g : acc) out.push_back(Value::graph(std::move(g)));
  return out;
}

inline std::vector<Carrier> all_carriers() {
  using namespace fixpoint;
  const Domain str = make_flat_string_domain();
  const Domain nat = make_nat_domain();
  const auto S = [](const char* s) { return Value::str(s); };
  const auto N = [](std::uint64_t n) { return Value::nat(n); };

  std::vector<Carrier> out;
  out.push_back({"flat_string", str, {S(""), S("a"), S("b"), S("c")}});
  out.push_back({"nat", nat, {N(0), N(1), N(2), N(3), N(4), N(5)}});
  out.push_back({"list_of_nat", make_list_domain(nat), sequences({N(0), N(1), N(2)}, 3)});
  out.push_back({"list_of_string", make_list_domain(str), sequences({S(""), S("a"), S("b")}, 2)});

  std::vector<Value> tuples;
  for (std::uint64_t n = 0; n < 4; ++n) {
    for (const char* s : {"", "a", "b"}) tuples.push_back(Value::seq({N(n), S(s)}));
  }
  out.push_back({"tuple", make_tuple_domain(nat, str), tuples});

  std::vector<Value> subsets;
  const std::vector<Value> atoms{S("a"), S("b"), S("c")};
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Value> items;
    for (unsigned i = 0; i < 3; ++i) {
      if (mask & (1U << i)) items.push_back(atoms[i]);
    }
    subsets.push_back(Value::seq(items));
  }
  out.push_back({"set", make_set_domain(str), subsets});

  out.push_back({"graph_nat", make_graph_domain(nat, nat),
                 graphs(nat, nat, {N(0), N(1), N(2)}, {N(0), N(1), N(2)})});
  out.push_back({"graph_string", make_graph_domain(nat, str),
                 graphs(nat, str, {N(0), N(1)}, {S(""), S("a"), S("b")})});
  return out;
}

inline std::strong_ordering flip(std::strong_ordering o) {
  return o < 0 ? std::strong_ordering::greater
               : (o > 0 ? std::strong_ordering::less : std::strong_ordering::equal);
}

/// Checks every law on (a, b, x), using the whole pool as the candidate set
/// of upper bounds.
inline bool check_laws(const Domain& d, const std::vector<Value>& pool, const Value& a,
                       const Value& b, const Value& x) {
  // partial order
  if (!d.leq(a, a)) return false;
  if (!d.leq(d.bottom(), a)) return false;
  if (d.leq(a, b) && d.leq(b, a) && !d.equal(a, b)) return false;
  if (d.leq(a, b) && d.leq(b, x) && !d.leq(a, x)) return false;

  // total order agrees with equality, which is structural
  if (d.compare(a, a) != 0) return false;
  if ((d.compare(a, b) == 0) != d.equal(a, b)) return false;
  if (d.equal(a, b) != (a == b)) return false;
  if (d.compare(b, a) != flip(d.compare(a, b))) return false;
  if (d.compare(a, b) < 0 && d.compare(b, x) < 0 && !(d.compare(a, x) < 0)) return false;

  // least upper bound against every upper bound in the pool
  std::vector<const Value*> ubs;
  for (const auto& u : pool) {
    if (d.leq(a, u) && d.leq(b, u)) ubs.push_back(&u);
  }
  const auto r = d.try_lub(a, b);
  if (!r) return ubs.empty();
  if (!d.leq(a, *r) || !d.leq(b, *r)) return false;
  for (const Value* u : ubs) {
    if (!d.leq(*r, *u)) return false;
  }
  const auto r2 = d.try_lub(b, a);
  return r2 && d.equal(*r, *r2);
}

inline std::string failure_report(const Domain& d, const Value& a, const Value& b, const Value& x) {
  std::ostringstream os;
  os << "a=" << d.render(a) << " b=" << d.render(b) << " x=" << d.render(x);
  return os.str();
}

}  // namespace samples
