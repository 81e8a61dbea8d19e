#include "fixpoint/analyses/demos.hpp"

#include <algorithm>

namespace fixpoint::analyses {

using hof::HArgs;
using hof::HCall;
using hof::HValue;

hof::HFunctional cps_demo_functional() {
  return [](const HCall& call, const HArgs& xs) -> std::optional<HValue> {
    if (xs.empty() || !xs[0].is_str()) return std::nullopt;
    const std::string& f = xs[0].as_str();
    const auto name = [](const char* s) { return HValue::str(s); };
    if (f == "g" && xs.size() == 3) {
      const HValue& n = xs[1];
      const HValue& k = xs[2];
      HValue k1 = call({k, HValue::nat(1)});
      HValue mk = call({name("m"), n, k});
      HValue rec = call({name("g"), n, mk});
      return hof::glb(n, hof::lub_v(k1, rec));
    }
    if (f == "m" && xs.size() == 4) return call({xs[2], hof::glb(xs[1], xs[3])});
    if (f == "top" && xs.size() == 2) return HValue::nat(1);
    if (f == "bot" && xs.size() == 2) return HValue::nat(0);
    if (f == "fb" && xs.size() == 2) {
      HValue k = call({name("bot")});
      return call({name("g"), xs[1], k});
    }
    if (f == "ft" && xs.size() == 2) {
      HValue k = call({name("top")});
      return call({name("g"), xs[1], k});
    }
    return std::nullopt;
  };
}

Functional oscillation_fixture() {
  return [](const Query& phi, const ArgVec& x) -> Value {
    Value inner = phi(x);
    Value outer = phi({inner});
    return Value::nat(std::min<std::uint64_t>(outer.as_nat() + 1, 2));
  };
}

Domain oscillation_domain() { return make_nat_domain(); }

}  // namespace fixpoint::analyses
