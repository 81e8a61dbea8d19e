#include "fixpoint/analyses/first_sets.hpp"

#include <algorithm>
#include <set>

namespace fixpoint::analyses {

Grammar::Grammar(std::vector<Production> productions) : productions_(std::move(productions)) {
  if (productions_.empty()) throw GrammarError("grammar has no productions");
  std::set<std::string> defined;
  for (const auto& p : productions_) defined.insert(p.lhs);
  for (const auto& p : productions_) {
    for (const auto& e : p.rhs) {
      if (e.kind == GrammarElem::Kind::nt && !defined.contains(e.text)) {
        throw GrammarError("nonterminal '" + e.text + "' has no production");
      }
    }
  }
}

std::vector<std::string> Grammar::nonterminals() const {
  std::vector<std::string> out;
  for (const auto& p : productions_) {
    if (std::find(out.begin(), out.end(), p.lhs) == out.end()) out.push_back(p.lhs);
  }
  return out;
}

bool Grammar::has_nonterminal(const std::string& name) const {
  return std::any_of(productions_.begin(), productions_.end(),
                     [&](const Production& p) { return p.lhs == name; });
}

Grammar expression_grammar() {
  using E = GrammarElem;
  return Grammar({
      {"exp", {E::nonterminal("term")}},
      {"exp", {E::nonterminal("exp"), E::terminal("+"), E::nonterminal("term")}},
      {"term", {E::nonterminal("factor")}},
      {"term", {E::nonterminal("term"), E::terminal("+"), E::nonterminal("factor")}},
      {"factor", {E::terminal("name")}},
      {"factor", {E::terminal("number")}},
      {"factor", {E::terminal("("), E::nonterminal("exp"), E::terminal(")")}},
  });
}

Value first_rhs(const Domain& elem, const Query& first, const std::vector<GrammarElem>& rhs) {
  const Domain sets = make_set_domain(elem);
  Value acc = sets.bottom();
  for (const auto& sym : rhs) {
    if (sym.kind == GrammarElem::Kind::tm) {
      return sets.lub(acc, set_singleton(Value::str(sym.text)));
    }
    Value ff = first({Value::str(sym.text)});
    acc = sets.lub(acc, ff);
    if (!set_member(elem, ff, Value::str(kEpsilon))) return acc;
  }
  return sets.lub(acc, set_singleton(Value::str(kEpsilon)));
}

Functional first_functional(const Grammar& g, Domain elem) {
  auto grammar = std::make_shared<const Grammar>(g);
  auto sets = make_set_domain(elem);
  return [grammar, elem, sets](const Query& first, const ArgVec& x) -> Value {
    const std::string& s = x.at(0).as_str();
    Value acc = sets.bottom();
    for (const auto& p : grammar->productions()) {
      if (p.lhs == s) acc = sets.lub(acc, first_rhs(elem, first, p.rhs));
    }
    return acc;
  };
}

FirstSets::FirstSets(Grammar g, SolverKind kind, std::optional<Domain> elem)
    : grammar_(std::move(g)) {
  Domain e = elem ? *elem : make_flat_string_domain();
  std::vector<ArgVec> universe;
  for (const auto& nt : grammar_.nonterminals()) universe.push_back({Value::str(nt)});
  solver_ = make_solver(kind, e, make_set_domain(e), first_functional(grammar_, e),
                        std::move(universe));
}

Value FirstSets::raw(const std::string& nt) {
  if (!grammar_.has_nonterminal(nt)) throw GrammarError("unknown nonterminal '" + nt + "'");
  return solver_->query({Value::str(nt)});
}

std::vector<std::string> FirstSets::operator()(const std::string& nt) {
  std::vector<std::string> out;
  for (const auto& v : raw(nt).as_seq()) out.push_back(v.as_str());
  return out;
}

}  // namespace fixpoint::analyses
