#include "fixpoint/analyses/strictness.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace fixpoint::analyses {

Expr Expr::param(std::string name) {
  Expr e;
  e.kind = Kind::param;
  e.name = std::move(name);
  return e;
}

Expr Expr::constant(std::int64_t v) {
  Expr e;
  e.kind = Kind::constant;
  e.value = v;
  return e;
}

Expr Expr::add(Expr a, Expr b) {
  Expr e;
  e.kind = Kind::add;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

Expr Expr::cond(Expr test, Expr then_branch, Expr else_branch) {
  Expr e;
  e.kind = Kind::cond;
  e.args.push_back(std::move(test));
  e.args.push_back(std::move(then_branch));
  e.args.push_back(std::move(else_branch));
  return e;
}

Expr Expr::call(std::string fn, std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::call;
  e.name = std::move(fn);
  e.args = std::move(args);
  return e;
}

namespace {

void check_expr(const Program& p, const FunctionDef& def, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::param:
      if (std::find(def.params.begin(), def.params.end(), e.name) == def.params.end()) {
        throw ProgramError("in " + def.name + ": unbound name '" + e.name + "'");
      }
      break;
    case Expr::Kind::call: {
      const FunctionDef* callee = p.find(e.name);
      if (!callee) throw ProgramError("in " + def.name + ": call to undefined function '" + e.name + "'");
      if (callee->params.size() != e.args.size()) {
        throw ProgramError("in " + def.name + ": " + e.name + " expects " +
                           std::to_string(callee->params.size()) + " argument(s), got " +
                           std::to_string(e.args.size()));
      }
      break;
    }
    default: break;
  }
  for (const auto& a : e.args) check_expr(p, def, a);
}

}  // namespace

Program::Program(std::vector<FunctionDef> defs) : defs_(std::move(defs)) {
  std::set<std::string> names;
  for (const auto& d : defs_) {
    if (!names.insert(d.name).second) throw ProgramError("function '" + d.name + "' defined twice");
  }
  for (const auto& d : defs_) check_expr(*this, d, d.body);
}

const FunctionDef* Program::find(const std::string& name) const {
  auto it = std::find_if(defs_.begin(), defs_.end(),
                         [&](const FunctionDef& d) { return d.name == name; });
  return it == defs_.end() ? nullptr : &*it;
}

namespace {

Domain counted(Domain d, const std::shared_ptr<ComparisonCounter>& counter) {
  return counter ? instrument(d, counter) : d;
}

}  // namespace

Domain strictness_arg_domain(std::shared_ptr<ComparisonCounter> counter) {
  return make_tuple_domain(counted(make_flat_string_domain(), counter),
                           make_list_domain(counted(make_nat_domain(), counter)));
}

Domain strictness_result_domain(std::shared_ptr<ComparisonCounter> counter) {
  return counted(make_nat_domain(), counter);
}

ArgVec strictness_key(const std::string& fn, const std::vector<AbstractValue>& args) {
  std::vector<Value> bits;
  bits.reserve(args.size());
  for (auto b : args) bits.push_back(Value::nat(b));
  return {Value::seq({Value::str(fn), Value::seq(std::move(bits))})};
}

std::vector<ArgVec> strictness_universe(const Program& p) {
  std::vector<ArgVec> out;
  for (const auto& d : p.definitions()) {
    const std::size_t n = d.params.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<AbstractValue> bits(n);
      for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1U;
      out.push_back(strictness_key(d.name, bits));
    }
  }
  return out;
}

namespace {

using Env = std::vector<std::pair<std::string, AbstractValue>>;

AbstractValue seval(const Query& q, const Env& env, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::constant: return 1;
    case Expr::Kind::param:
      for (const auto& [name, v] : env) {
        if (name == e.name) return v;
      }
      throw ProgramError("unbound name '" + e.name + "'");
    case Expr::Kind::add: return std::min(seval(q, env, e.args[0]), seval(q, env, e.args[1]));
    case Expr::Kind::cond: {
      AbstractValue t = seval(q, env, e.args[0]);
      AbstractValue a = seval(q, env, e.args[1]);
      AbstractValue b = seval(q, env, e.args[2]);
      return std::min(t, std::max(a, b));
    }
    case Expr::Kind::call: {
      std::vector<AbstractValue> args;
      args.reserve(e.args.size());
      for (const auto& a : e.args) args.push_back(seval(q, env, a));
      return q(strictness_key(e.name, args)).as_nat();
    }
  }
  return 0;
}

}  // namespace

Functional strictness_functional(const Program& p) {
  auto prog = std::make_shared<const Program>(p);
  return [prog](const Query& q, const ArgVec& x) -> Value {
    const auto& tuple = x.at(0).as_seq();
    const std::string& fn = tuple.at(0).as_str();
    const FunctionDef* def = prog->find(fn);
    if (!def) throw ProgramError("undefined function '" + fn + "'");
    const auto& bits = tuple.at(1).as_seq();
    Env env;
    for (std::size_t i = 0; i < def->params.size() && i < bits.size(); ++i) {
      env.emplace_back(def->params[i], bits[i].as_nat());
    }
    return Value::nat(seval(q, env, def->body));
  };
}

StrictnessAnalysis::StrictnessAnalysis(Program p, SolverKind kind,
                                       std::shared_ptr<ComparisonCounter> counter)
    : program_(std::move(p)),
      solver_(make_solver(kind, strictness_arg_domain(counter), strictness_result_domain(counter),
                          strictness_functional(program_), strictness_universe(program_))) {}

AbstractValue StrictnessAnalysis::operator()(const std::string& fn,
                                             const std::vector<AbstractValue>& args) {
  const FunctionDef* def = program_.find(fn);
  if (!def) throw ProgramError("undefined function '" + fn + "'");
  if (def->params.size() != args.size()) {
    throw ProgramError(fn + " expects " + std::to_string(def->params.size()) +
                       " argument(s), got " + std::to_string(args.size()));
  }
  for (auto b : args) {
    if (b > 1) throw ProgramError("abstract arguments must be 0 or 1");
  }
  return solver_->query(strictness_key(fn, args)).as_nat();
}

}  // namespace fixpoint::analyses
