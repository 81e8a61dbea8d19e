#pragma once

// Need-instrumented higher-order values and the higher-order fixpoint.
//
// A Res is a first-order stand-in for a higher-order value: an atom or a
// graph from Res argument vectors to (result, needs). Needs record, for each
// argument position of a call, the argument vectors that position was called
// with. An HValue is a live value; closures carry both their tabulated graph
// and a callable.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fixpoint/value.hpp"

namespace fixpoint::hof {

class ResGraph;

class Res {
 public:
  enum class Kind : std::uint8_t { bot = 0, nat = 1, str = 2, graph = 3 };

  Res() = default;
  static Res bot() { return Res(); }
  static Res nat(std::int64_t n);
  static Res str(std::string s);
  static Res graph(ResGraph g);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_bot() const { return kind() == Kind::bot; }
  bool is_nat() const { return kind() == Kind::nat; }
  bool is_str() const { return kind() == Kind::str; }
  bool is_graph() const { return kind() == Kind::graph; }

  std::int64_t as_nat() const;
  const std::string& as_str() const;
  const ResGraph& as_graph() const;

  /// Total order: tag first (bot < nat < str < graph), then contents.
  friend std::strong_ordering operator<=>(const Res& a, const Res& b);
  friend bool operator==(const Res& a, const Res& b) { return (a <=> b) == 0; }

 private:
  std::variant<std::monostate, std::int64_t, std::string, std::shared_ptr<const ResGraph>> rep_;
};

using ResVec = std::vector<Res>;

/// One set of argument vectors per position, each sorted without duplicates.
/// Ordered as a list of sets: the empty sequence is bottom and a shorter
/// sequence is below a longer one whose prefix contains it position-wise.
using Needs = std::vector<std::vector<ResVec>>;

struct ResEntry {
  Res result;
  Needs needs;
  friend std::strong_ordering operator<=>(const ResEntry&, const ResEntry&) = default;
  friend bool operator==(const ResEntry&, const ResEntry&) = default;
};

class ResGraph {
 public:
  using Map = std::map<ResVec, ResEntry>;
  using const_iterator = Map::const_iterator;

  /// Stored entry, or (bot, bot_n) when absent.
  const ResEntry& lookup(const ResVec& key) const;
  bool is_defined(const ResVec& key) const { return entries_.contains(key); }
  void set(const ResVec& key, ResEntry e) { entries_.insert_or_assign(key, std::move(e)); }
  bool erase(const ResVec& key) { return entries_.erase(key) > 0; }
  void clear() { entries_.clear(); }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  const_iterator find(const ResVec& key) const { return entries_.find(key); }

  friend std::strong_ordering operator<=>(const ResGraph& a, const ResGraph& b);
  friend bool operator==(const ResGraph& a, const ResGraph& b) { return a.entries_ == b.entries_; }

 private:
  Map entries_;
};

// Domain structure on Res, Needs and ResGraph. Atoms are flat apart from
// naturals (ordered by <=); graphs use the partial-map order with
// component-wise order on (result, needs).
bool leq_r(const Res& a, const Res& b);
bool leq_n(const Needs& a, const Needs& b);
bool leq_g(const ResGraph& a, const ResGraph& b);
/// Throws NoUpperBound for incompatible atoms.
Res lub_r(const Res& a, const Res& b);
Needs lub_n(const Needs& a, const Needs& b);
ResGraph lub_g(const ResGraph& a, const ResGraph& b);
ResEntry lub_rn(const ResEntry& a, const ResEntry& b);
bool eq_n(const Needs& a, const Needs& b);
bool eq_g(const ResGraph& a, const ResGraph& b);

class HValue;
using HArgs = std::vector<HValue>;
using HCall = std::function<HValue(const HArgs&)>;

class HValue {
 public:
  enum class Kind : std::uint8_t { bot = 0, nat = 1, str = 2, closure = 3 };

  HValue() = default;
  static HValue bot() { return HValue(); }
  static HValue nat(std::int64_t n);
  static HValue str(std::string s);
  static HValue closure(ResGraph graph, HCall call);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_bot() const { return kind() == Kind::bot; }
  bool is_nat() const { return kind() == Kind::nat; }
  bool is_str() const { return kind() == Kind::str; }
  bool is_closure() const { return kind() == Kind::closure; }

  std::int64_t as_nat() const;
  const std::string& as_str() const;
  const ResGraph& graph() const;
  const HCall& function() const;
  HValue operator()(const HArgs& args) const { return function()(args); }

 private:
  struct Closure {
    std::shared_ptr<const ResGraph> graph;
    HCall call;
  };
  std::variant<std::monostate, std::int64_t, std::string, Closure> rep_;
};

Res v2r(const HValue& v);
/// Graphs become closures that look their argument up in the graph.
HValue r2v(const Res& r);
ResVec v2r(const HArgs& vs);
HArgs r2v(const ResVec& rs);

struct Called {
  HValue value;
  Needs needs;
};

/// Calls f with every closure argument wrapped to record the vectors it is
/// called with. Needs are bottom when no argument is a closure; otherwise
/// there is one set per argument position.
Called callneed(const HCall& f, const HArgs& args);

/// Converts arguments to Res, tabulating each closure at exactly the vectors
/// its position lists in `needs`.
ResVec tabulate(const HArgs& args, const Needs& needs);

/// Closure with an empty graph that appends its arguments to `pending` and
/// hands the result to `call`.
HValue partial_application(HCall call, HArgs pending);

/// Minimum on naturals; bottom for anything else.
HValue glb(const HValue& a, const HValue& b);
HValue lub_v(const HValue& a, const HValue& b);

/// A higher-order functional F(call, xs). Function identifiers are string
/// atoms in position 0 of xs. Returning nullopt means no equation applies to
/// xs as given; the fixpoint then treats xs as a partial application.
using HFunctional = std::function<std::optional<HValue>(const HCall& call, const HArgs& xs)>;

struct HofStats {
  std::uint64_t evaluations = 0;  // calls of the functional
  std::uint64_t passes = 0;       // outer iterations
};

/// Higher-order fixpoint by two-level iteration: an inner loop re-tabulates
/// functional arguments until their needs stop growing, an outer loop
/// repeats depth-first evaluation until two consecutive graphs agree.
/// Tabulations persist across queries.
class HofFixpoint {
 public:
  explicit HofFixpoint(HFunctional f);

  HValue operator()(const HArgs& xs);
  /// The recursive call handed to the functional.
  HCall call() const;
  /// Graph of the last completed pass.
  const ResGraph& table() const;
  const HofStats& stats() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

HofFixpoint hof_fix(HFunctional f);

/// One line per entry, `name: [args] => (value, needs)`, in key order. The
/// name position is dropped from both the key and the needs.
std::string render_table(const ResGraph& g, bool skip_bottom = true,
                         RenderStyle style = RenderStyle::unicode);
std::string render(const Res& r, RenderStyle style = RenderStyle::unicode);
std::string render(const Needs& n, RenderStyle style = RenderStyle::unicode);

}  // namespace fixpoint::hof
