#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixpoint/value.hpp"

namespace fixpoint {

/// Raised when a least upper bound is requested for two values that have no
/// common upper bound. Inside a fixpoint solver this means the functional is
/// not pseudo-monotonic.
class NoUpperBound : public std::runtime_error {
 public:
  NoUpperBound(std::string domain, std::string lhs, std::string rhs);

  const std::string& domain() const { return domain_; }
  const std::string& lhs() const { return lhs_; }
  const std::string& rhs() const { return rhs_; }

 private:
  std::string domain_, lhs_, rhs_;
};

/// Implementation interface behind Domain. Combinators derive from this.
class DomainImpl {
 public:
  virtual ~DomainImpl() = default;

  virtual std::string name() const = 0;
  virtual const Value& bottom() const = 0;
  virtual bool leq(const Value& a, const Value& b) const = 0;
  virtual bool equal(const Value& a, const Value& b) const = 0;
  virtual std::strong_ordering compare(const Value& a, const Value& b) const = 0;
  /// Partial join; nullopt when no upper bound exists.
  virtual std::optional<Value> join(const Value& a, const Value& b) const = 0;
  virtual std::string render(const Value& v, RenderStyle style) const = 0;
};

/// A bundle of domain operations over Values: bottom, partial order,
/// equality, an implementation total order and a partial least upper bound.
///
/// The total order is unrelated to the partial order but agrees with
/// equality. Domains are immutable and cheap to copy.
class Domain {
 public:
  explicit Domain(std::shared_ptr<const DomainImpl> impl);

  std::string name() const { return impl_->name(); }
  const Value& bottom() const { return impl_->bottom(); }
  bool leq(const Value& a, const Value& b) const { return impl_->leq(a, b); }
  bool equal(const Value& a, const Value& b) const { return impl_->equal(a, b); }
  std::strong_ordering compare(const Value& a, const Value& b) const {
    return impl_->compare(a, b);
  }
  std::optional<Value> try_lub(const Value& a, const Value& b) const {
    return impl_->join(a, b);
  }
  /// Throws NoUpperBound when the join does not exist.
  Value lub(const Value& a, const Value& b) const;
  std::string render(const Value& v, RenderStyle style = RenderStyle::unicode) const {
    return impl_->render(v, style);
  }

  /// Lexicographic comparison of argument vectors under this domain's order.
  std::strong_ordering compare(const ArgVec& a, const ArgVec& b) const;
  bool equal(const ArgVec& a, const ArgVec& b) const;

 private:
  std::shared_ptr<const DomainImpl> impl_;
};

Domain make_flat_string_domain();
Domain make_nat_domain();
Domain make_list_domain(Domain elem);
Domain make_tuple_domain(Domain first, Domain second);
Domain make_set_domain(Domain elem);
Domain make_graph_domain(Domain arg, Domain res);

// Set helpers. Sets are sequences sorted by elem.compare without duplicates.
// set_difference and set_singleton are not monotonic.
Value set_of(const Domain& elem, std::vector<Value> items);
Value set_singleton(const Value& item);
bool set_member(const Domain& elem, const Value& set, const Value& item);
Value set_intersect(const Domain& elem, const Value& a, const Value& b);
Value set_difference(const Domain& elem, const Value& a, const Value& b);

/// Counter shared by instrumented domains.
using ComparisonCounter = std::atomic<std::uint64_t>;

/// Wraps dom so that every leq, equal and compare call bumps *counter.
/// Composite domains built over an instrumented element domain therefore
/// count element comparisons.
Domain instrument(const Domain& dom, std::shared_ptr<ComparisonCounter> counter);

}  // namespace fixpoint
