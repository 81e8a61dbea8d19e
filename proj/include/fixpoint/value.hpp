#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace fixpoint {

class FunctionGraph;
class Value;

/// An argument vector: the key type of function graphs.
using ArgVec = std::vector<Value>;

enum class RenderStyle { unicode, ascii };

/// Marker for the distinguished bottom atom.
struct BotMark {
  friend bool operator==(BotMark, BotMark) = default;
};

/// Universal first-order carrier shared by all domains.
///
/// A value is a bottom mark, a natural number, a string atom, a finite
/// sequence (lists, tuples and sets are all sequences) or a function graph.
/// Sequences and graphs are immutable and shared, so copies are cheap.
/// Comparison operators are structural: tag first, then contents.
class Value {
 public:
  enum class Kind : std::uint8_t { bot = 0, nat = 1, str = 2, seq = 3, graph = 4 };

  Value() = default;

  static Value bot() { return Value(); }
  static Value nat(std::uint64_t n);
  static Value str(std::string s);
  static Value seq(std::vector<Value> items);
  static Value graph(FunctionGraph g);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_bot() const { return kind() == Kind::bot; }
  bool is_nat() const { return kind() == Kind::nat; }
  bool is_str() const { return kind() == Kind::str; }
  bool is_seq() const { return kind() == Kind::seq; }
  bool is_graph() const { return kind() == Kind::graph; }

  // Accessors throw std::logic_error on a kind mismatch.
  std::uint64_t as_nat() const;
  const std::string& as_str() const;
  const std::vector<Value>& as_seq() const;
  const FunctionGraph& as_graph() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  using SeqPtr = std::shared_ptr<const std::vector<Value>>;
  using GraphPtr = std::shared_ptr<const FunctionGraph>;
  std::variant<BotMark, std::uint64_t, std::string, SeqPtr, GraphPtr> rep_;
};

const char* kind_name(Value::Kind k);

/// Domain-independent rendering, used in diagnostics.
std::string to_string(const Value& v, RenderStyle style = RenderStyle::unicode);
std::string to_string(const ArgVec& args, RenderStyle style = RenderStyle::unicode);

}  // namespace fixpoint
