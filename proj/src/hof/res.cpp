#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fixpoint/domain.hpp"
#include "fixpoint/hof.hpp"

namespace fixpoint::hof {

Res Res::nat(std::int64_t n) {
  Res r;
  r.rep_ = n;
  return r;
}

Res Res::str(std::string s) {
  Res r;
  r.rep_ = std::move(s);
  return r;
}

Res Res::graph(ResGraph g) {
  Res r;
  r.rep_ = std::make_shared<const ResGraph>(std::move(g));
  return r;
}

std::int64_t Res::as_nat() const {
  if (!is_nat()) throw std::logic_error("Res is not a natural");
  return std::get<std::int64_t>(rep_);
}

const std::string& Res::as_str() const {
  if (!is_str()) throw std::logic_error("Res is not a string");
  return std::get<std::string>(rep_);
}

const ResGraph& Res::as_graph() const {
  if (!is_graph()) throw std::logic_error("Res is not a graph");
  return *std::get<std::shared_ptr<const ResGraph>>(rep_);
}

std::strong_ordering operator<=>(const Res& a, const Res& b) {
  if (auto c = a.rep_.index() <=> b.rep_.index(); c != 0) return c;
  switch (a.kind()) {
    case Res::Kind::bot: return std::strong_ordering::equal;
    case Res::Kind::nat: return a.as_nat() <=> b.as_nat();
    case Res::Kind::str: return a.as_str().compare(b.as_str()) <=> 0;
    case Res::Kind::graph: return a.as_graph() <=> b.as_graph();
  }
  return std::strong_ordering::equal;
}

const ResEntry& ResGraph::lookup(const ResVec& key) const {
  static const ResEntry kBottom{};
  auto it = entries_.find(key);
  return it == entries_.end() ? kBottom : it->second;
}

std::strong_ordering operator<=>(const ResGraph& a, const ResGraph& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ---- order and lub --------------------------------------------------------

namespace {

bool subset(const std::vector<ResVec>& a, const std::vector<ResVec>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ResVec> unite(const std::vector<ResVec>& a, const std::vector<ResVec>& b) {
  std::vector<ResVec> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool leq_r(const Res& a, const Res& b) {
  if (a.is_bot()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Res::Kind::nat: return a.as_nat() <= b.as_nat();
    case Res::Kind::str: return a.as_str() == b.as_str();
    case Res::Kind::graph: return leq_g(a.as_graph(), b.as_graph());
    case Res::Kind::bot: break;
  }
  return true;
}

bool leq_n(const Needs& a, const Needs& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!subset(a[i], b[i])) return false;
  }
  return true;
}

bool leq_g(const ResGraph& a, const ResGraph& b) {
  for (const auto& [key, e] : a) {
    auto it = b.find(key);
    if (it == b.end()) return false;
    if (!leq_r(e.result, it->second.result) || !leq_n(e.needs, it->second.needs)) return false;
  }
  return true;
}

Res lub_r(const Res& a, const Res& b) {
  if (a.is_bot()) return b;
  if (b.is_bot()) return a;
  if (a.kind() == b.kind()) {
    switch (a.kind()) {
      case Res::Kind::nat: return a.as_nat() < b.as_nat() ? b : a;
      case Res::Kind::str:
        if (a.as_str() == b.as_str()) return a;
        break;
      case Res::Kind::graph: return Res::graph(lub_g(a.as_graph(), b.as_graph()));
      case Res::Kind::bot: break;
    }
  }
  throw NoUpperBound("Res", render(a), render(b));
}

Needs lub_n(const Needs& a, const Needs& b) {
  const Needs& longer = a.size() >= b.size() ? a : b;
  const Needs& shorter = a.size() >= b.size() ? b : a;
  Needs out = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = unite(longer[i], shorter[i]);
  return out;
}

ResEntry lub_rn(const ResEntry& a, const ResEntry& b) {
  return {lub_r(a.result, b.result), lub_n(a.needs, b.needs)};
}

ResGraph lub_g(const ResGraph& a, const ResGraph& b) {
  ResGraph out = a;
  for (const auto& [key, e] : b) {
    auto it = out.find(key);
    out.set(key, it == out.end() ? e : lub_rn(it->second, e));
  }
  return out;
}

bool eq_n(const Needs& a, const Needs& b) { return a == b; }
bool eq_g(const ResGraph& a, const ResGraph& b) { return a == b; }

// ---- rendering ------------------------------------------------------------

namespace {

void render_vec(std::ostream& os, const ResVec& v, RenderStyle style, std::size_t from = 0) {
  os << '[';
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) os << ',';
    os << render(v[i], style);
  }
  os << ']';
}

}  // namespace

std::string render(const Res& r, RenderStyle style) {
  switch (r.kind()) {
    case Res::Kind::bot: return style == RenderStyle::ascii ? "_|_" : "⊥";
    case Res::Kind::nat: return std::to_string(r.as_nat());
    case Res::Kind::str: return '"' + r.as_str() + '"';
    case Res::Kind::graph: {
      std::ostringstream os;
      os << '{';
      bool first = true;
      for (const auto& [key, e] : r.as_graph()) {
        if (!first) os << ',';
        first = false;
        render_vec(os, key, style);
        os << "->" << render(e.result, style);
      }
      os << '}';
      return os.str();
    }
  }
  return "?";
}

std::string render(const Needs& n, RenderStyle style) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i > 0) os << ',';
    os << '[';
    for (std::size_t j = 0; j < n[i].size(); ++j) {
      if (j > 0) os << ',';
      render_vec(os, n[i][j], style);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string render_table(const ResGraph& g, bool skip_bottom, RenderStyle style) {
  std::ostringstream os;
  for (const auto& [key, e] : g) {
    if (skip_bottom && e.result.is_bot()) continue;
    if (!key.empty() && key.front().is_str()) {
      os << key.front().as_str() << ": ";
      render_vec(os, key, style, 1);
    } else {
      render_vec(os, key, style);
    }
    Needs needs = e.needs;
    if (!needs.empty() && !key.empty() && key.front().is_str()) needs.erase(needs.begin());
    os << " => (" << render(e.result, style) << ", " << render(needs, style) << ")\n";
  }
  return os.str();
}

}  // namespace fixpoint::hof
