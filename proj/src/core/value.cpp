#include "fixpoint/value.hpp"

#include <stdexcept>
#include <string>

#include "fixpoint/function_graph.hpp"

namespace fixpoint {

namespace {

[[noreturn]] void kind_mismatch(Value::Kind want, Value::Kind got) {
  throw std::logic_error(std::string("expected ") + kind_name(want) + " value, got " +
                         kind_name(got));
}

std::strong_ordering compare_args(const ArgVec& a, const ArgVec& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Value Value::nat(std::uint64_t n) {
  Value v;
  v.rep_ = n;
  return v;
}

Value Value::str(std::string s) {
  Value v;
  v.rep_ = std::move(s);
  return v;
}

Value Value::seq(std::vector<Value> items) {
  Value v;
  v.rep_ = std::make_shared<const std::vector<Value>>(std::move(items));
  return v;
}

Value Value::graph(FunctionGraph g) {
  Value v;
  v.rep_ = std::make_shared<const FunctionGraph>(std::move(g));
  return v;
}

std::uint64_t Value::as_nat() const {
  if (!is_nat()) kind_mismatch(Kind::nat, kind());
  return std::get<std::uint64_t>(rep_);
}

const std::string& Value::as_str() const {
  if (!is_str()) kind_mismatch(Kind::str, kind());
  return std::get<std::string>(rep_);
}

const std::vector<Value>& Value::as_seq() const {
  if (!is_seq()) kind_mismatch(Kind::seq, kind());
  return *std::get<SeqPtr>(rep_);
}

const FunctionGraph& Value::as_graph() const {
  if (!is_graph()) kind_mismatch(Kind::graph, kind());
  return *std::get<GraphPtr>(rep_);
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Value::Kind::bot:
      return std::strong_ordering::equal;
    case Value::Kind::nat:
      return a.as_nat() <=> b.as_nat();
    case Value::Kind::str:
      return a.as_str().compare(b.as_str()) <=> 0;
    case Value::Kind::seq: {
      const auto& xs = a.as_seq();
      const auto& ys = b.as_seq();
      if (xs.size() != ys.size()) return xs.size() <=> ys.size();
      return compare_args(xs, ys);
    }
    case Value::Kind::graph: {
      const auto& g = a.as_graph();
      const auto& h = b.as_graph();
      auto it = g.begin();
      auto jt = h.begin();
      for (; it != g.end() && jt != h.end(); ++it, ++jt) {
        if (auto c = compare_args(it->first, jt->first); c != 0) return c;
        if (auto c = it->second <=> jt->second; c != 0) return c;
      }
      return g.size() <=> h.size();
    }
  }
  return std::strong_ordering::equal;
}

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::bot: return "bottom";
    case Value::Kind::nat: return "nat";
    case Value::Kind::str: return "string";
    case Value::Kind::seq: return "sequence";
    case Value::Kind::graph: return "graph";
  }
  return "?";
}

std::string to_string(const Value& v, RenderStyle style) {
  switch (v.kind()) {
    case Value::Kind::bot:
      return style == RenderStyle::ascii ? "_|_" : "⊥";
    case Value::Kind::nat:
      return std::to_string(v.as_nat());
    case Value::Kind::str:
      return '"' + v.as_str() + '"';
    case Value::Kind::seq:
      return to_string(v.as_seq(), style);
    case Value::Kind::graph: {
      std::string out = "{";
      bool first = true;
      for (const auto& [key, val] : v.as_graph()) {
        if (!first) out += ", ";
        first = false;
        out += to_string(key, style) + " -> " + to_string(val, style);
      }
      return out + "}";
    }
  }
  return "?";
}

std::string to_string(const ArgVec& args, RenderStyle style) {
  std::string out = "[";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(args[i], style);
  }
  return out + "]";
}

}  // namespace fixpoint
