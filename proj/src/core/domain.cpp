#include "fixpoint/domain.hpp"

#include <algorithm>
#include <utility>

#include "fixpoint/function_graph.hpp"

namespace fixpoint {

NoUpperBound::NoUpperBound(std::string domain, std::string lhs, std::string rhs)
    : std::runtime_error("no upper bound in " + domain + " for " + lhs + " and " + rhs),
      domain_(std::move(domain)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

Domain::Domain(std::shared_ptr<const DomainImpl> impl) : impl_(std::move(impl)) {}

Value Domain::lub(const Value& a, const Value& b) const {
  if (auto j = impl_->join(a, b)) return std::move(*j);
  throw NoUpperBound(name(), render(a), render(b));
}

std::strong_ordering Domain::compare(const ArgVec& a, const ArgVec& b) const {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

bool Domain::equal(const ArgVec& a, const ArgVec& b) const {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

namespace {

std::string join_rendered(const std::vector<std::string>& parts, const char* open,
                          const char* close) {
  std::string out = open;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + close;
}

class FlatStringDomain final : public DomainImpl {
 public:
  std::string name() const override { return "strdom"; }
  const Value& bottom() const override { return bot_; }
  bool leq(const Value& a, const Value& b) const override {
    return a.as_str().empty() || a.as_str() == b.as_str();
  }
  bool equal(const Value& a, const Value& b) const override { return a.as_str() == b.as_str(); }
  std::strong_ordering compare(const Value& a, const Value& b) const override {
    return a.as_str().compare(b.as_str()) <=> 0;
  }
  std::optional<Value> join(const Value& a, const Value& b) const override {
    if (a.as_str().empty()) return b;
    if (b.as_str().empty() || a.as_str() == b.as_str()) return a;
    return std::nullopt;
  }
  std::string render(const Value& v, RenderStyle) const override {
    return '"' + v.as_str() + '"';
  }

 private:
  Value bot_ = Value::str("");
};

class NatDomain final : public DomainImpl {
 public:
  std::string name() const override { return "intdom"; }
  const Value& bottom() const override { return bot_; }
  bool leq(const Value& a, const Value& b) const override { return a.as_nat() <= b.as_nat(); }
  bool equal(const Value& a, const Value& b) const override { return a.as_nat() == b.as_nat(); }
  std::strong_ordering compare(const Value& a, const Value& b) const override {
    return a.as_nat() <=> b.as_nat();
  }
  std::optional<Value> join(const Value& a, const Value& b) const override {
    return a.as_nat() < b.as_nat() ? b : a;
  }
  std::string render(const Value& v, RenderStyle) const override {
    return std::to_string(v.as_nat());
  }

 private:
  Value bot_ = Value::nat(0);
};

// Lists: shorter lists sit below longer ones that agree element-wise.
class ListDomain final : public DomainImpl {
 public:
  explicit ListDomain(Domain elem) : elem_(std::move(elem)) {}

  std::string name() const override { return "listdom(" + elem_.name() + ")"; }
  const Value& bottom() const override { return bot_; }
  bool leq(const Value& a, const Value& b) const override {
    const auto& xs = a.as_seq();
    const auto& ys = b.as_seq();
    if (xs.size() > ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!elem_.leq(xs[i], ys[i])) return false;
    }
    return true;
  }
  bool equal(const Value& a, const Value& b) const override {
    return elem_.equal(a.as_seq(), b.as_seq());
  }
  std::strong_ordering compare(const Value& a, const Value& b) const override {
    const auto& xs = a.as_seq();
    const auto& ys = b.as_seq();
    if (xs.size() != ys.size()) return xs.size() <=> ys.size();
    return elem_.compare(xs, ys);
  }
  std::optional<Value> join(const Value& a, const Value& b) const override {
    const auto& xs = a.as_seq();
    const auto& ys = b.as_seq();
    const auto& longer = xs.size() >= ys.size() ? xs : ys;
    const std::size_t common = std::min(xs.size(), ys.size());
    std::vector<Value> out;
    out.reserve(longer.size());
    for (std::size_t i = 0; i < common; ++i) {
      auto j = elem_.try_lub(xs[i], ys[i]);
      if (!j) return std::nullopt;
      out.push_back(std::move(*j));
    }
    out.insert(out.end(), longer.begin() + static_cast<std::ptrdiff_t>(common), longer.end());
    return Value::seq(std::move(out));
  }
  std::string render(const Value& v, RenderStyle style) const override {
    std::vector<std::string> parts;
    for (const auto& x : v.as_seq()) parts.push_back(elem_.render(x, style));
    return join_rendered(parts, "[", "]");
  }

 private:
  Domain elem_;
  Value bot_ = Value::seq({});
};

class TupleDomain final : public DomainImpl {
 public:
  TupleDomain(Domain first, Domain second)
      : first_(std::move(first)),
        second_(std::move(second)),
        bot_(Value::seq({first_.bottom(), second_.bottom()})) {}

  std::string name() const override {
    return "tupdom(" + first_.name() + ", " + second_.name() + ")";
  }
  const Value& bottom() const override { return bot_; }
  bool leq(const Value& a, const Value& b) const override {
    const auto& [x1, x2] = parts(a);
    const auto& [y1, y2] = parts(b);
    return first_.leq(x1, y1) && second_.leq(x2, y2);
  }
  bool equal(const Value& a, const Value& b) const override {
    const auto& [x1, x2] = parts(a);
    const auto& [y1, y2] = parts(b);
    return first_.equal(x1, y1) && second_.equal(x2, y2);
  }
  std::strong_ordering compare(const Value& a, const Value& b) const override {
    const auto& [x1, x2] = parts(a);
    const auto& [y1, y2] = parts(b);
    if (auto c = first_.compare(x1, y1); c != 0) return c;
    return second_.compare(x2, y2);
  }
  std::optional<Value> join(const Value& a, const Value& b) const override {
    const auto& [x1, x2] = parts(a);
    const auto& [y1, y2] = parts(b);
    auto j1 = first_.try_lub(x1, y1);
    if (!j1) return std::nullopt;
    auto j2 = second_.try_lub(x2, y2);
    if (!j2) return std::nullopt;
    return Value::seq({std::move(*j1), std::move(*j2)});
  }
  std::string render(const Value& v, RenderStyle style) const override {
    const auto& [x1, x2] = parts(v);
    return "(" + first_.render(x1, style) + ", " + second_.render(x2, style) + ")";
  }

 private:
  static std::pair<const Value&, const Value&> parts(const Value& v) {
    const auto& xs = v.as_seq();
    if (xs.size() != 2) throw std::logic_error("tuple value must have two components");
    return {xs[0], xs[1]};
  }

  Domain first_, second_;
  Value bot_;
};

// Sets are sorted sequences; order is inclusion and lub is a sorted merge.
class SetDomain final : public DomainImpl {
 public:
  explicit SetDomain(Domain elem) : elem_(std::move(elem)) {}

  std::string name() const override { return "setdom(" + elem_.name() + ")"; }
  const Value& bottom() const override { return bot_; }
  bool leq(const Value& a, const Value& b) const override {
    const auto& xs = a.as_seq();
    const auto& ys = b.as_seq();
    if (xs.size() > ys.size()) return false;
    std::size_t j = 0;
    for (const auto& x : xs) {
      for (;;) {
        if (j == ys.size()) return false;
        auto c = elem_.compare(ys[j], x);
        if (c < 0) {
          ++j;
          continue;
        }
        if (c > 0) return false;
        ++j;
        break;
      }
    }
    return true;
  }
  bool equal(const Value& a, const Value& b) const override {
    return elem_.equal(a.as_seq(), b.as_seq());
  }
  std::strong_ordering compare(const Value& a, const Value& b) const override {
    const auto& xs = a.as_seq();
    const auto& ys = b.as_seq();
    if (xs.size() != ys.size()) return xs.size() <=> ys.size();
    return elem_.compare(xs, ys);
  }
  std::optional<Value> join(const Value& a, const Value& b) const override {
    const auto& xs = a.as_seq();
    const auto& ys = b.as_seq();
    if (xs.empty()) return b;
    if (ys.empty()) return a;
    std::vector<Value> out;
    out.reserve(xs.size() + ys.size());
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
      auto c = elem_.compare(xs[i], ys[j]);
      if (c < 0) {
        out.push_back(xs[i++]);
      } else if (c > 0) {
        out.push_back(ys[j++]);
      } else {
        out.push_back(xs[i++]);
        ++j;
      }
    }
    out.insert(out.end(), xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end());
    out.insert(out.end(), ys.begin() + static_cast<std::ptrdiff_t>(j), ys.end());
    return Value::seq(std::move(out));
  }
  std::string render(const Value& v, RenderStyle style) const override {
    std::vector<std::string> parts;
    for (const auto& x : v.as_seq()) parts.push_back(elem_.render(x, style));
    return join_rendered(parts, "{", "}");
  }

 private:
  Domain elem_;
  Value bot_ = Value::seq({});
};

// Partial function graphs, ordered as partial maps: every key of the smaller
// graph is defined in the larger one with a larger-or-equal result.
class GraphDomain final : public DomainImpl {
 public:
  GraphDomain(Domain arg, Domain res)
      : arg_(std::move(arg)), res_(std::move(res)), bot_(Value::graph(FunctionGraph(arg_, res_))) {}

  std::string name() const override { return "grfdom(" + arg_.name() + ", " + res_.name() + ")"; }
  const Value& bottom() const override { return bot_; }
  bool leq(const Value& a, const Value& b) const override {
    const auto& g = a.as_graph();
    const auto& h = b.as_graph();
    if (g.size() > h.size()) return false;
    auto jt = h.begin();
    for (const auto& [key, val] : g) {
      for (;;) {
        if (jt == h.end()) return false;
        auto c = arg_.compare(jt->first, key);
        if (c < 0) {
          ++jt;
          continue;
        }
        if (c > 0 || !res_.leq(val, jt->second)) return false;
        ++jt;
        break;
      }
    }
    return true;
  }
  bool equal(const Value& a, const Value& b) const override {
    return graph_equal(a.as_graph(), b.as_graph());
  }
  std::strong_ordering compare(const Value& a, const Value& b) const override {
    const auto& g = a.as_graph();
    const auto& h = b.as_graph();
    auto it = g.begin();
    auto jt = h.begin();
    for (; it != g.end() && jt != h.end(); ++it, ++jt) {
      if (auto c = arg_.compare(it->first, jt->first); c != 0) return c;
      if (auto c = res_.compare(it->second, jt->second); c != 0) return c;
    }
    return g.size() <=> h.size();
  }
  std::optional<Value> join(const Value& a, const Value& b) const override {
    const auto& g = a.as_graph();
    const auto& h = b.as_graph();
    if (g.empty()) return b;
    if (h.empty()) return a;
    FunctionGraph out(arg_, res_);
    auto it = g.begin();
    auto jt = h.begin();
    while (it != g.end() && jt != h.end()) {
      auto c = arg_.compare(it->first, jt->first);
      if (c < 0) {
        out.set(it->first, it->second);
        ++it;
      } else if (c > 0) {
        out.set(jt->first, jt->second);
        ++jt;
      } else {
        auto j = res_.try_lub(it->second, jt->second);
        if (!j) return std::nullopt;
        out.set(it->first, std::move(*j));
        ++it;
        ++jt;
      }
    }
    for (; it != g.end(); ++it) out.set(it->first, it->second);
    for (; jt != h.end(); ++jt) out.set(jt->first, jt->second);
    return Value::graph(std::move(out));
  }
  std::string render(const Value& v, RenderStyle style) const override {
    std::vector<std::string> parts;
    for (const auto& [key, val] : v.as_graph()) {
      std::vector<std::string> args;
      for (const auto& k : key) args.push_back(arg_.render(k, style));
      parts.push_back(join_rendered(args, "[", "]") + " -> " + res_.render(val, style));
    }
    return join_rendered(parts, "{", "}");
  }

 private:
  Domain arg_, res_;
  Value bot_;
};

class InstrumentedDomain final : public DomainImpl {
 public:
  InstrumentedDomain(Domain inner, std::shared_ptr<ComparisonCounter> counter)
      : inner_(std::move(inner)), counter_(std::move(counter)) {}

  std::string name() const override { return inner_.name(); }
  const Value& bottom() const override { return inner_.bottom(); }
  bool leq(const Value& a, const Value& b) const override {
    tick();
    return inner_.leq(a, b);
  }
  bool equal(const Value& a, const Value& b) const override {
    tick();
    return inner_.equal(a, b);
  }
  std::strong_ordering compare(const Value& a, const Value& b) const override {
    tick();
    return inner_.compare(a, b);
  }
  std::optional<Value> join(const Value& a, const Value& b) const override {
    return inner_.try_lub(a, b);
  }
  std::string render(const Value& v, RenderStyle style) const override {
    return inner_.render(v, style);
  }

 private:
  void tick() const { counter_->fetch_add(1, std::memory_order_relaxed); }

  Domain inner_;
  std::shared_ptr<ComparisonCounter> counter_;
};

}  // namespace

Domain make_flat_string_domain() { return Domain(std::make_shared<FlatStringDomain>()); }
Domain make_nat_domain() { return Domain(std::make_shared<NatDomain>()); }
Domain make_list_domain(Domain elem) {
  return Domain(std::make_shared<ListDomain>(std::move(elem)));
}
Domain make_tuple_domain(Domain first, Domain second) {
  return Domain(std::make_shared<TupleDomain>(std::move(first), std::move(second)));
}
Domain make_set_domain(Domain elem) { return Domain(std::make_shared<SetDomain>(std::move(elem))); }
Domain make_graph_domain(Domain arg, Domain res) {
  return Domain(std::make_shared<GraphDomain>(std::move(arg), std::move(res)));
}

Domain instrument(const Domain& dom, std::shared_ptr<ComparisonCounter> counter) {
  return Domain(std::make_shared<InstrumentedDomain>(dom, std::move(counter)));
}

Value set_of(const Domain& elem, std::vector<Value> items) {
  std::sort(items.begin(), items.end(),
            [&](const Value& a, const Value& b) { return elem.compare(a, b) < 0; });
  items.erase(std::unique(items.begin(), items.end(),
                          [&](const Value& a, const Value& b) { return elem.equal(a, b); }),
              items.end());
  return Value::seq(std::move(items));
}

Value set_singleton(const Value& item) { return Value::seq({item}); }

bool set_member(const Domain& elem, const Value& set, const Value& item) {
  const auto& xs = set.as_seq();
  auto it = std::lower_bound(xs.begin(), xs.end(), item,
                             [&](const Value& a, const Value& b) { return elem.compare(a, b) < 0; });
  return it != xs.end() && elem.equal(*it, item);
}

Value set_intersect(const Domain& elem, const Value& a, const Value& b) {
  const auto& xs = a.as_seq();
  const auto& ys = b.as_seq();
  std::vector<Value> out;
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    auto c = elem.compare(xs[i], ys[j]);
    if (c < 0) {
      ++i;
    } else if (c > 0) {
      ++j;
    } else {
      out.push_back(xs[i]);
      ++i;
      ++j;
    }
  }
  return Value::seq(std::move(out));
}

Value set_difference(const Domain& elem, const Value& a, const Value& b) {
  const auto& xs = a.as_seq();
  const auto& ys = b.as_seq();
  std::vector<Value> out;
  std::size_t j = 0;
  for (const auto& x : xs) {
    while (j < ys.size() && elem.compare(ys[j], x) < 0) ++j;
    if (j < ys.size() && elem.compare(ys[j], x) == 0) continue;
    out.push_back(x);
  }
  return Value::seq(std::move(out));
}

}  // namespace fixpoint
