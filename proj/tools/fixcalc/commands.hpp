#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "fixpoint/solvers.hpp"

namespace fixcalc {

/// Bad input from the user: unknown names, malformed queries. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solvers disagreeing or an oracle check failing. Exit code 3.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  fixpoint::SolverKind solver = fixpoint::SolverKind::tdf;
  bool stats = false;
  fixpoint::RenderStyle style = fixpoint::RenderStyle::unicode;
};

std::string cmd_first(const std::string& grammar_path, const std::optional<std::string>& start,
                      const Options& opts);
std::string cmd_strict(const std::string& program_path, const std::string& query,
                       const Options& opts);
std::string cmd_bench(const std::string& grammar_path, const Options& opts);
std::string cmd_hof_demo(const Options& opts);
std::string cmd_demo_oscillate(const Options& opts);

}  // namespace fixcalc
