#pragma once

#include <set>

#include "fixpoint/solvers.hpp"

namespace fixpoint::detail {

struct ArgLess {
  Domain arg;
  bool operator()(const ArgVec& a, const ArgVec& b) const { return arg.compare(a, b) < 0; }
};

using ArgSet = std::set<ArgVec, ArgLess>;

}  // namespace fixpoint::detail
