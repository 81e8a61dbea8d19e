#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixpoint/solvers.hpp"

namespace fixpoint::analyses {

/// First-order expressions of the analysed language.
struct Expr {
  enum class Kind { param, constant, add, cond, call };

  Kind kind = Kind::constant;
  std::string name;          // parameter or callee
  std::int64_t value = 0;    // constant
  std::vector<Expr> args;    // add: 2, cond: 3, call: n

  static Expr param(std::string name);
  static Expr constant(std::int64_t v);
  static Expr add(Expr a, Expr b);
  static Expr cond(Expr test, Expr then_branch, Expr else_branch);
  static Expr call(std::string fn, std::vector<Expr> args);
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  Expr body;
};

class ProgramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A list of function definitions, validated on construction: unique names,
/// every call names a defined function with the right number of arguments,
/// every parameter reference is bound.
class Program {
 public:
  explicit Program(std::vector<FunctionDef> defs);

  const std::vector<FunctionDef>& definitions() const { return defs_; }
  /// nullptr when undefined.
  const FunctionDef* find(const std::string& name) const;

 private:
  std::vector<FunctionDef> defs_;
};

/// Abstract values: 0 may diverge, 1 defined.
using AbstractValue = std::uint64_t;

/// Arguments are one tuple (function name, list of abstract values). With a
/// counter, the base string and natural domains are instrumented.
Domain strictness_arg_domain(std::shared_ptr<ComparisonCounter> counter = nullptr);
Domain strictness_result_domain(std::shared_ptr<ComparisonCounter> counter = nullptr);
ArgVec strictness_key(const std::string& fn, const std::vector<AbstractValue>& args);
/// Every function paired with every vector in {0,1}^arity.
std::vector<ArgVec> strictness_universe(const Program& p);

/// Abstract semantics of the program as a functional: constants give 1,
/// + gives the glb, if gives glb(test, lub(then, else)) and calls query the
/// function being solved for.
Functional strictness_functional(const Program& p);

/// The solved strictness function. Answers are memoized across queries.
class StrictnessAnalysis {
 public:
  explicit StrictnessAnalysis(Program p, SolverKind kind = SolverKind::tdf,
                              std::shared_ptr<ComparisonCounter> counter = nullptr);

  /// Throws ProgramError for an unknown function or a wrong argument count.
  AbstractValue operator()(const std::string& fn, const std::vector<AbstractValue>& args);

  const Program& program() const { return program_; }
  Solver& solver() { return *solver_; }

 private:
  Program program_;
  std::unique_ptr<Solver> solver_;
};

}  // namespace fixpoint::analyses
