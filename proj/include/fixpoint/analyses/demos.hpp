#pragma once

#include "fixpoint/hof.hpp"
#include "fixpoint/solvers.hpp"

namespace fixpoint::analyses {

/// Strictness of the CPS factorial, over the two-point domain {0,1}:
///   g(n,k)    = n ⊓ (k(1) ⊔ g(n, m(n,k)))
///   m(n,k,x)  = k(n ⊓ x)
///   top(x) = 1, bot(x) = 0, fb(x) = g(x, bot), ft(x) = g(x, top)
/// Any other application is partial.
hof::HFunctional cps_demo_functional();

/// G φ x = φ(φ(x)) ⊕ 1 over {0,1,2}, with x ⊕ 1 = min(x + 1, 2). Not
/// monotone under naive re-evaluation, which oscillates at x = 1.
Functional oscillation_fixture();
/// Natural-number domain the fixture runs over.
Domain oscillation_domain();

}  // namespace fixpoint::analyses
