#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixpoint/solvers.hpp"

namespace fixpoint::analyses {

struct GrammarElem {
  enum class Kind { nt, tm };
  Kind kind = Kind::nt;
  std::string text;

  static GrammarElem nonterminal(std::string name) { return {Kind::nt, std::move(name)}; }
  static GrammarElem terminal(std::string text) { return {Kind::tm, std::move(text)}; }
  friend bool operator==(const GrammarElem&, const GrammarElem&) = default;
};

struct Production {
  std::string lhs;
  std::vector<GrammarElem> rhs;  // empty: epsilon
};

class GrammarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Context-free grammar. Construction checks that there is at least one
/// production and that every nonterminal used has a production.
class Grammar {
 public:
  explicit Grammar(std::vector<Production> productions);

  const std::vector<Production>& productions() const { return productions_; }
  /// Distinct left-hand sides in order of first appearance.
  std::vector<std::string> nonterminals() const;
  bool has_nonterminal(const std::string& name) const;

 private:
  std::vector<Production> productions_;
};

/// The expression grammar used throughout the examples: exp, term, factor.
Grammar expression_grammar();

/// The empty string marks epsilon in FIRST sets.
inline const std::string kEpsilon;

/// FIRST of a symbol sequence given FIRST of nonterminals via `first`.
/// `elem` is the string domain used to build the result set.
Value first_rhs(const Domain& elem, const Query& first, const std::vector<GrammarElem>& rhs);

/// FIRST as a functional over [nonterminal] -> set of terminals.
Functional first_functional(const Grammar& g, Domain elem);

/// The solved FIRST function. The whole needed part of the fixpoint is
/// tabulated by the first query; later queries reuse it.
class FirstSets {
 public:
  /// `elem` defaults to the flat string domain; pass an instrumented one to
  /// count comparisons.
  explicit FirstSets(Grammar g, SolverKind kind = SolverKind::tdf,
                     std::optional<Domain> elem = std::nullopt);

  /// Terminals in total order; kEpsilon marks a nullable nonterminal.
  /// Throws GrammarError for an unknown nonterminal.
  std::vector<std::string> operator()(const std::string& nt);
  Value raw(const std::string& nt);

  const Grammar& grammar() const { return grammar_; }
  Solver& solver() { return *solver_; }

 private:
  Grammar grammar_;
  std::unique_ptr<Solver> solver_;
};

}  // namespace fixpoint::analyses
