#pragma once

#include "pcgc/error.hpp"
#include "pcgc/order.hpp"
#include "pcgc/subset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pcgc {

/// How integer results are brought back into a bounded carrier.
enum class ArithMode {
  none,        // atoms, or integers where escaping the range is an error
  saturating,  // clamp to [lo, hi]
  modular,     // wrap around [lo, hi]
};

std::string_view to_string(ArithMode mode);
ArithMode parse_arith_mode(std::string_view text);

/// Explicit finite set of concrete values: either named atoms or a contiguous
/// integer range whose elements are named by their decimal rendering.
class Carrier {
 public:
  Carrier() = default;

  static Carrier atoms(std::vector<std::string> names);
  static Carrier ints(std::int64_t lo, std::int64_t hi, ArithMode mode);
  /// [-n, n] with clamping.
  static Carrier saturating(std::int64_t n) { return ints(-n, n, ArithMode::saturating); }
  /// [-n, n-1] with wraparound (even cardinality, so parity alternates across the seam).
  static Carrier modular(std::int64_t n) { return ints(-n, n - 1, ArithMode::modular); }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t index(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;

  bool is_integer() const noexcept { return integer_; }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  ArithMode mode() const noexcept { return mode_; }

  std::int64_t value(std::size_t i) const;
  /// Index of an in-range integer; throws UnknownElement otherwise.
  std::size_t of_value(std::int64_t v) const;
  /// Index of an arbitrary integer after applying the arithmetic mode.
  std::size_t normalize(std::int64_t v) const;

  Subset empty() const { return Subset(size()); }
  Subset all() const { return full_subset(size()); }
  template <typename Pred>
  Subset where(Pred&& keep) const {
    Subset s(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (keep(value(i))) s.set(i);
    return s;
  }

  std::string format(const Subset& s) const { return set_name(names_, s); }
  /// Inverse of format(); throws FormatError / UnknownElement.
  Subset parse_subset(std::string_view text) const;

  /// Order in which checkers scan concrete values when looking for a
  /// counterexample: integers by magnitude (0, 1, -1, 2, -2, ...), atoms in
  /// declaration order. Reported witnesses are therefore the smallest ones.
  const std::vector<std::size_t>& search_order() const noexcept { return search_order_; }

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.names_ == b.names_ && a.integer_ == b.integer_ && a.mode_ == b.mode_;
  }

 private:
  void finish();

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> search_order_;
  bool integer_ = false;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = -1;
  ArithMode mode_ = ArithMode::none;
};

/// Total table from an indexed domain to an indexed codomain.
using IndexMap = std::vector<std::size_t>;
/// Total table from an indexed domain to subsets of a codomain.
using SetMap = std::vector<Subset>;

/// f◇(X) = { f(x) | x ∈ X }.
Subset lift_diamond(const IndexMap& f, std::size_t codomain_size, const Subset& x);
/// g*(X) = ∪_{x ∈ X} g(x).
Subset lift_star(const SetMap& g, std::size_t codomain_size, const Subset& x);
/// k∨(X) = ∨_{a ∈ X} k(a), bottom on the empty set.
std::size_t lift_lub(const Lattice& l, const IndexMap& k, const Subset& x);
/// f▷(a) = { f(a) }.
Subset lift_singleton(const IndexMap& f, std::size_t codomain_size, std::size_t a);

/// ⟨h⟩(a) = h({a}).
template <typename H>
auto lower_singleton(H&& h, std::size_t domain_size, std::size_t a) {
  if (a >= domain_size) throw Error(ErrorKind::UnknownElement, "element outside the domain");
  return h(singleton(domain_size, a));
}

struct PartitionCheck {
  enum class Clause { ok, empty_block, overlap, not_covering };

  Clause clause = Clause::ok;
  std::optional<std::size_t> witness;                             // offending carrier element
  std::optional<std::pair<std::size_t, std::size_t>> block_pair;  // for overlap

  bool ok() const noexcept { return clause == Clause::ok; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Blocks are compared as sets, so repeated blocks count once.
PartitionCheck check_partition(const Carrier& carrier, std::span<const Subset> blocks);

}  // namespace pcgc
