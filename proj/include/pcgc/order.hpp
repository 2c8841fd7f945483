#pragma once

#include "pcgc/subset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pcgc {

/// Finite partial order over opaque string identifiers.
///
/// The relation is stored closed (reflexive-transitive) as bit rows, one per
/// element, so `leq` is a single bit test. A linear extension is kept as well:
/// the least element of any upward-closed set is its first member in that
/// extension, which makes lub/glb lookups a `find_first` on a bit row.
class Poset {
 public:
  Poset() = default;

  static Poset discrete(std::vector<std::string> elements);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& elements() const noexcept { return names_; }

  /// Throws UnknownElement.
  std::size_t index(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// {b | a <= b} and {b | b <= a}.
  const Subset& up(std::size_t a) const { return up_[a]; }
  const Subset& down(std::size_t a) const { return down_[a]; }

  bool is_discrete() const;
  bool is_down_closed(const Subset& s) const;

  /// Covering pairs (a, b): a < b with nothing strictly in between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Elements listed so that a < b implies a comes first.
  const std::vector<std::size_t>& linear_extension() const noexcept { return order_; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  friend class Lattice;
  friend Poset build_poset_indexed(std::vector<std::string>,
                                   const std::vector<std::pair<std::size_t, std::size_t>>&);
  friend Poset inclusion_poset(std::vector<std::string>, const std::vector<Subset>&);

  Poset(std::vector<std::string> names, std::vector<Subset> up);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::size_t> order_;     // position -> element
  std::vector<std::size_t> position_;  // element -> position
  // Rows re-indexed by linear-extension position. up_pos_ lets find_first()
  // return the least member; down_rev_ is reversed so find_first() returns
  // the greatest member.
  std::vector<Subset> up_pos_;
  std::vector<Subset> down_rev_;
};

/// Reflexive-transitive closure of `pairs` (each (x, y) meaning x <= y).
/// Throws DuplicateElement, UnknownElement, CycleDetected.
Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& pairs);
Poset build_poset_indexed(std::vector<std::string> elements,
                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Order a family of pairwise distinct sets by inclusion.
Poset inclusion_poset(std::vector<std::string> names, const std::vector<Subset>& sets);

/// Complete lattice over a finite poset. Construction verifies that top and
/// bottom exist and every pair has a least upper bound, which is enough for
/// a finite poset.
class Lattice {
 public:
  Lattice() = default;

  /// Throws NotCompleteLattice naming the first pair without a lub.
  static Lattice from_poset(Poset p);
  static std::optional<Lattice> try_from(Poset p);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::string& name(std::size_t i) const { return poset_.name(i); }
  std::size_t index(std::string_view n) const { return poset_.index(n); }
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }

  std::size_t top() const noexcept { return top_; }
  std::size_t bottom() const noexcept { return bottom_; }

  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t lub(const Subset& s) const;
  std::size_t glb(const Subset& s) const;

  template <typename Range>
  std::size_t lub_of(const Range& elems) const {
    Subset acc = full_positions();
    for (std::size_t e : elems) acc &= poset_.up_pos_[e];
    return least_of(acc);
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.poset_ == b.poset_; }

 private:
  friend class SetLattice;
  Lattice(Poset p, std::size_t top, std::size_t bottom)
      : poset_(std::move(p)), top_(top), bottom_(bottom) {}

  Subset full_positions() const { return full_subset(poset_.size()); }
  std::size_t least_of(const Subset& upper_bounds_pos) const;
  std::size_t greatest_of(const Subset& lower_bounds_rev) const;

  Poset poset_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

enum class Bound { lub, glb };

/// Throws UnknownElement when `s` is not over the lattice's elements.
std::size_t lattice_bound(const Lattice& l, const Subset& s, Bound direction);

/// Elements x with x = lub(S) => x in S; bottom is never join-irreducible.
Subset join_irreducibles(const Lattice& l);

/// Smallest downward-closed superset of `x`. Throws UnknownElement.
Subset down_closure(const Poset& p, const Subset& x);

/// Smallest superset of `s` closed under arbitrary glbs (so it holds top).
Subset meet_closure(const Lattice& l, const Subset& s);

/// A complete lattice whose elements are sets over some universe, ordered by
/// inclusion. The family must contain the full universe and be closed under
/// intersection (a Moore family); lub is then the least member above the
/// union and glb is intersection.
class SetLattice {
 public:
  SetLattice() = default;

  /// Throws ShapeMismatch unless `sets` is a Moore family of distinct sets.
  SetLattice(std::vector<std::string> names, std::vector<Subset> sets);

  /// Skips the Moore-family check, for families closed by construction.
  static SetLattice trusted(std::vector<std::string> names, std::vector<Subset> sets);

  const Lattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return sets_.size(); }
  std::size_t universe() const noexcept { return universe_; }
  const Subset& set(std::size_t i) const { return sets_.at(i); }
  const std::vector<Subset>& sets() const noexcept { return sets_; }
  std::optional<std::size_t> find(const Subset& s) const;
  /// Throws UnknownElement when `s` is not a member of the family.
  std::size_t element_of(const Subset& s) const;
  /// Least member containing `s`.
  std::size_t closure_of(const Subset& s) const;

 private:
  void index_members(const std::vector<std::string>& names);
  void build_order(std::vector<std::string> names);

  std::size_t universe_ = 0;
  std::vector<Subset> sets_;
  std::unordered_map<Subset, std::size_t, SubsetHash> index_;
  Lattice lattice_;
};

inline constexpr std::size_t kMaxDownsets = std::size_t{1} << 16;

/// Every downward-closed subset of `p`, smallest first. Throws TooLarge past
/// kMaxDownsets.
std::vector<Subset> enumerate_downsets(const Poset& p);

/// All downward-closed subsets of `p` under inclusion. Element names are the
/// canonical "{a,b}" renderings in `p`'s element order. Throws TooLarge past
/// kMaxDownsets.
SetLattice downsets_lattice(const Poset& p);

/// Powerset of `names` (at most 20 elements), element i is the subset with
/// bitmask i.
SetLattice powerset_lattice(const std::vector<std::string>& names);

/// "{a,b}" with members in element order.
std::string set_name(const std::vector<std::string>& names, const Subset& s);

}  // namespace pcgc
