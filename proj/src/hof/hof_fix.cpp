#include <algorithm>
#include <stdexcept>

#include "fixpoint/hof.hpp"

namespace fixpoint::hof {

HValue HValue::nat(std::int64_t n) {
  HValue v;
  v.rep_ = n;
  return v;
}

HValue HValue::str(std::string s) {
  HValue v;
  v.rep_ = std::move(s);
  return v;
}

HValue HValue::closure(ResGraph graph, HCall call) {
  HValue v;
  v.rep_ = Closure{std::make_shared<const ResGraph>(std::move(graph)), std::move(call)};
  return v;
}

std::int64_t HValue::as_nat() const {
  if (!is_nat()) throw std::logic_error("HValue is not a natural");
  return std::get<std::int64_t>(rep_);
}

const std::string& HValue::as_str() const {
  if (!is_str()) throw std::logic_error("HValue is not a string");
  return std::get<std::string>(rep_);
}

const ResGraph& HValue::graph() const {
  if (!is_closure()) throw std::logic_error("HValue is not a closure");
  return *std::get<Closure>(rep_).graph;
}

const HCall& HValue::function() const {
  if (!is_closure()) throw std::logic_error("HValue is not a closure");
  return std::get<Closure>(rep_).call;
}

Res v2r(const HValue& v) {
  switch (v.kind()) {
    case HValue::Kind::bot: return Res::bot();
    case HValue::Kind::nat: return Res::nat(v.as_nat());
    case HValue::Kind::str: return Res::str(v.as_str());
    case HValue::Kind::closure: return Res::graph(v.graph());
  }
  return Res::bot();
}

HValue r2v(const Res& r) {
  switch (r.kind()) {
    case Res::Kind::bot: return HValue::bot();
    case Res::Kind::nat: return HValue::nat(r.as_nat());
    case Res::Kind::str: return HValue::str(r.as_str());
    case Res::Kind::graph: {
      const ResGraph& g = r.as_graph();
      return HValue::closure(g, [g](const HArgs& xs) { return r2v(g.lookup(v2r(xs)).result); });
    }
  }
  return HValue::bot();
}

ResVec v2r(const HArgs& vs) {
  ResVec out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v2r(v));
  return out;
}

HArgs r2v(const ResVec& rs) {
  HArgs out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(r2v(r));
  return out;
}

Called callneed(const HCall& f, const HArgs& args) {
  if (std::none_of(args.begin(), args.end(), [](const HValue& v) { return v.is_closure(); })) {
    return {f(args), Needs{}};
  }
  // Wrapped closures may escape into partial applications; the recorder
  // outlives this call and stops mattering once it returns.
  auto rec = std::make_shared<Needs>(args.size());
  HArgs wrapped;
  wrapped.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const HValue& a = args[i];
    if (!a.is_closure()) {
      wrapped.push_back(a);
      continue;
    }
    wrapped.push_back(HValue::closure(a.graph(), [rec, i, inner = a.function()](const HArgs& ys) {
      ResVec key = v2r(ys);
      auto& set = (*rec)[i];
      auto pos = std::lower_bound(set.begin(), set.end(), key);
      if (pos == set.end() || *pos != key) set.insert(pos, key);
      return inner(ys);
    }));
  }
  HValue v = f(wrapped);
  return {std::move(v), *rec};
}

ResVec tabulate(const HArgs& args, const Needs& needs) {
  ResVec out;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const HValue& a = args[i];
    if (!a.is_closure()) {
      out.push_back(v2r(a));
      continue;
    }
    ResGraph g;
    if (i < needs.size()) {
      for (const ResVec& ys : needs[i]) {
        Called c = callneed(a.function(), r2v(ys));
        g.set(ys, {v2r(c.value), std::move(c.needs)});
      }
    }
    out.push_back(Res::graph(std::move(g)));
  }
  return out;
}

HValue partial_application(HCall call, HArgs pending) {
  return HValue::closure(ResGraph{}, [call = std::move(call), pending = std::move(pending)](
                                         const HArgs& ys) {
    HArgs all = pending;
    all.insert(all.end(), ys.begin(), ys.end());
    return call(all);
  });
}

HValue glb(const HValue& a, const HValue& b) {
  if (a.is_nat() && b.is_nat()) return a.as_nat() > b.as_nat() ? b : a;
  return HValue::bot();
}

HValue lub_v(const HValue& a, const HValue& b) { return r2v(lub_r(v2r(a), v2r(b))); }

// ---- the fixpoint ---------------------------------------------------------

struct HofFixpoint::State : std::enable_shared_from_this<State> {
  HFunctional functional;
  ResGraph phi1;  // previous pass
  ResGraph phi2;  // current pass
  HofStats stats;

  struct Outcome {
    HValue value;
    Needs needs;
    bool partial = false;
  };

  HCall ff() {
    return [self = shared_from_this()](const HArgs& ws) { return self->gg(Needs{}, ws); };
  }

  Outcome FF(const ResVec& rs) {
    if (rs.empty() || rs.front().is_bot()) return {HValue::bot(), Needs{}};
    if (rs.front().is_graph()) {
      Called c = callneed(
          [](const HArgs& xs) {
            return xs.front()(HArgs(xs.begin() + 1, xs.end()));
          },
          r2v(rs));
      return {std::move(c.value), std::move(c.needs)};
    }
    if (auto it = phi2.find(rs); it != phi2.end()) {
      return {r2v(it->second.result), it->second.needs};
    }
    phi2.set(rs, phi1.lookup(rs));
    bool partial = false;
    HCall call = ff();
    Called c = callneed(
        [&](const HArgs& xs) {
          ++stats.evaluations;
          std::optional<HValue> r = functional(call, xs);
          if (!r) {
            partial = true;
            return HValue::bot();
          }
          return *std::move(r);
        },
        r2v(rs));
    if (partial) {
      phi2.erase(rs);
      return {HValue::bot(), Needs{}, true};
    }
    phi2.set(rs, lub_rn(phi2.lookup(rs), {v2r(c.value), c.needs}));
    return {std::move(c.value), std::move(c.needs)};
  }

  // Re-tabulates the arguments until the recorded needs stop growing.
  HValue gg(Needs nd, const HArgs& vs) {
    for (;;) {
      Outcome o = FF(tabulate(vs, nd));
      if (o.partial) return partial_application(ff(), vs);
      Needs n2 = lub_n(o.needs, nd);
      if (eq_n(nd, n2)) return o.value;
      nd = std::move(n2);
    }
  }

  HValue iterate(const HArgs& xs) {
    for (;;) {
      phi1 = std::move(phi2);
      phi2.clear();
      ++stats.passes;
      HValue v = gg(Needs{}, xs);
      if (eq_g(phi2, phi1)) return v;
    }
  }
};

HofFixpoint::HofFixpoint(HFunctional f) : state_(std::make_shared<State>()) {
  state_->functional = std::move(f);
}

HValue HofFixpoint::operator()(const HArgs& xs) { return state_->iterate(xs); }

HCall HofFixpoint::call() const { return state_->ff(); }

const ResGraph& HofFixpoint::table() const { return state_->phi2; }

const HofStats& HofFixpoint::stats() const { return state_->stats; }

HofFixpoint hof_fix(HFunctional f) { return HofFixpoint(std::move(f)); }

}  // namespace fixpoint::hof
