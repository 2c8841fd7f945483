#include "pcgc/order.hpp"

#include "pcgc/error.hpp"

#include <algorithm>
#include <numeric>

namespace pcgc {

namespace {

std::unordered_map<std::string, std::size_t> index_names(const std::vector<std::string>& names) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second)
      throw Error(ErrorKind::DuplicateElement, "element '" + names[i] + "' listed twice");
  }
  return index;
}

}  // namespace

Poset::Poset(std::vector<std::string> names, std::vector<Subset> up)
    : names_(std::move(names)), index_(index_names(names_)), up_(std::move(up)) {
  const std::size_t n = names_.size();
  down_.assign(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a)
    for_each_member(up_[a], [&](std::size_t b) { down_[b].set(a); });

  // a < b implies |down(a)| < |down(b)|, so sorting by that count is a
  // linear extension.
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
    return down_[x].count() < down_[y].count();
  });
  position_.resize(n);
  for (std::size_t p = 0; p < n; ++p) position_[order_[p]] = p;

  up_pos_.assign(n, Subset(n));
  down_rev_.assign(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a) {
    for_each_member(up_[a], [&](std::size_t b) { up_pos_[a].set(position_[b]); });
    for_each_member(down_[a], [&](std::size_t b) { down_rev_[a].set(n - 1 - position_[b]); });
  }
}

Poset Poset::discrete(std::vector<std::string> elements) {
  const std::size_t n = elements.size();
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  return Poset(std::move(elements), std::move(up));
}

std::size_t Poset::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownElement, "no element '" + std::string(name) + "'");
}

std::optional<std::size_t> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Poset::is_discrete() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (up_[a].count() != 1) return false;
  return true;
}

bool Poset::is_down_closed(const Subset& s) const {
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a))
    if (!down_[a].is_subset_of(s)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for_each_member(up_[a], [&](std::size_t b) {
      if (a == b) return;
      Subset between = up_[a] & down_[b];
      if (between.count() == 2) out.emplace_back(a, b);
    });
  }
  return out;
}

Poset build_poset_indexed(std::vector<std::string> elements,
                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = elements.size();
  index_names(elements);
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(ErrorKind::UnknownElement, "pair references index out of range");
    up[x].set(y);
  }
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (auto j = up[i].find_first(); j != Subset::npos; j = up[i].find_next(j))
      if (j != i && up[j].test(i))
        throw Error(ErrorKind::CycleDetected,
                    "'" + elements[i] + "' and '" + elements[j] + "' are mutually below each other");
  return Poset(std::move(elements), std::move(up));
}

Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto index = index_names(elements);
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  indexed.reserve(pairs.size());
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorKind::UnknownElement, "pair references unknown element '" + name + "'");
    return it->second;
  };
  for (const auto& [x, y] : pairs) indexed.emplace_back(lookup(x), lookup(y));
  return build_poset_indexed(std::move(elements), indexed);
}

Poset inclusion_poset(std::vector<std::string> names, const std::vector<Subset>& sets) {
  const std::size_t n = sets.size();
  if (names.size() != n) throw Error(ErrorKind::ShapeMismatch, "one name per set required");
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (sets[a].is_subset_of(sets[b])) up[a].set(b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (sets[a] == sets[b]) throw Error(ErrorKind::CycleDetected, "'" + names[a] + "' and '" + names[b] + "' denote the same set");
  return Poset(std::move(names), std::move(up));
}

// ---------------------------------------------------------------------------

std::size_t Lattice::least_of(const Subset& upper_bounds_pos) const {
  auto p = upper_bounds_pos.find_first();
  if (p == Subset::npos) throw Error(ErrorKind::NotCompleteLattice, "no upper bound");
  return poset_.order_[p];
}

std::size_t Lattice::greatest_of(const Subset& lower_bounds_rev) const {
  auto p = lower_bounds_rev.find_first();
  if (p == Subset::npos) throw Error(ErrorKind::NotCompleteLattice, "no lower bound");
  return poset_.order_[poset_.size() - 1 - p];
}

std::optional<Lattice> Lattice::try_from(Poset p) {
  try {
    return from_poset(std::move(p));
  } catch (const Error&) {
    return std::nullopt;
  }
}

Lattice Lattice::from_poset(Poset p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorKind::NotCompleteLattice, "empty poset has no bottom");
  const std::size_t bottom = p.order_.front();
  const std::size_t top = p.order_.back();
  if (p.up_[bottom].count() != n) throw Error(ErrorKind::NotCompleteLattice, "no bottom element");
  if (p.down_[top].count() != n) throw Error(ErrorKind::NotCompleteLattice, "no top element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Subset ub = p.up_pos_[a] & p.up_pos_[b];
      auto first = ub.find_first();
      if (first == Subset::npos || !ub.is_subset_of(p.up_pos_[p.order_[first]]))
        throw Error(ErrorKind::NotCompleteLattice,
                    "'" + p.name(a) + "' and '" + p.name(b) + "' have no least upper bound");
    }
  }
  return Lattice(std::move(p), top, bottom);
}

std::size_t Lattice::join(std::size_t a, std::size_t b) const {
  return least_of(poset_.up_pos_[a] & poset_.up_pos_[b]);
}

std::size_t Lattice::meet(std::size_t a, std::size_t b) const {
  return greatest_of(poset_.down_rev_[a] & poset_.down_rev_[b]);
}

std::size_t Lattice::lub(const Subset& s) const {
  Subset acc = full_positions();
  for_each_member(s, [&](std::size_t e) { acc &= poset_.up_pos_[e]; });
  return least_of(acc);
}

std::size_t Lattice::glb(const Subset& s) const {
  Subset acc = full_positions();
  for_each_member(s, [&](std::size_t e) { acc &= poset_.down_rev_[e]; });
  return greatest_of(acc);
}

std::size_t lattice_bound(const Lattice& l, const Subset& s, Bound direction) {
  if (s.size() != l.size()) throw Error(ErrorKind::UnknownElement, "subset is not over this lattice");
  return direction == Bound::lub ? l.lub(s) : l.glb(s);
}

Subset join_irreducibles(const Lattice& l) {
  Subset out(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    Subset strictly_below = l.poset().down(x);
    strictly_below.reset(x);
    if (l.lub(strictly_below) != x) out.set(x);
  }
  return out;
}

Subset down_closure(const Poset& p, const Subset& x) {
  if (x.size() != p.size()) throw Error(ErrorKind::UnknownElement, "subset is not over this poset");
  Subset out(p.size());
  for_each_member(x, [&](std::size_t e) { out |= p.down(e); });
  return out;
}

Subset meet_closure(const Lattice& l, const Subset& s) {
  if (s.size() != l.size()) throw Error(ErrorKind::UnknownElement, "subset is not over this lattice");
  Subset out = s;
  out.set(l.top());
  bool changed = true;
  while (changed) {
    changed = false;
    auto current = members(out);
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        auto m = l.meet(current[i], current[j]);
        if (!out.test(m)) {
          out.set(m);
          changed = true;
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------

void SetLattice::index_members(const std::vector<std::string>& names) {
  if (names.size() != sets_.size()) throw Error(ErrorKind::ShapeMismatch, "one name per set required");
  if (sets_.empty()) throw Error(ErrorKind::ShapeMismatch, "set lattice needs at least one member");
  universe_ = sets_.front().size();
  index_.reserve(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].size() != universe_) throw Error(ErrorKind::ShapeMismatch, "members over different universes");
    if (!index_.emplace(sets_[i], i).second)
      throw Error(ErrorKind::ShapeMismatch, "'" + names[i] + "' repeats an earlier member");
  }
}

void SetLattice::build_order(std::vector<std::string> names) {
  Poset p = inclusion_poset(std::move(names), sets_);
  const std::size_t bottom = p.linear_extension().front();
  const std::size_t top = p.linear_extension().back();
  lattice_ = Lattice(std::move(p), top, bottom);
}

SetLattice::SetLattice(std::vector<std::string> names, std::vector<Subset> sets) : sets_(std::move(sets)) {
  index_members(names);
  if (!index_.count(full_subset(universe_)))
    throw Error(ErrorKind::ShapeMismatch, "family does not contain the full universe");
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = i + 1; j < sets_.size(); ++j)
      if (!index_.count(sets_[i] & sets_[j]))
        throw Error(ErrorKind::ShapeMismatch,
                    "family is not closed under intersection ('" + names[i] + "', '" + names[j] + "')");
  build_order(std::move(names));
}

SetLattice SetLattice::trusted(std::vector<std::string> names, std::vector<Subset> sets) {
  SetLattice out;
  out.sets_ = std::move(sets);
  out.index_members(names);
  out.build_order(std::move(names));
  return out;
}

std::optional<std::size_t> SetLattice::find(const Subset& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SetLattice::element_of(const Subset& s) const {
  if (auto i = find(s)) return *i;
  throw Error(ErrorKind::UnknownElement, "set is not a member of the family");
}

std::size_t SetLattice::closure_of(const Subset& s) const {
  if (auto i = find(s)) return *i;
  std::size_t best = lattice_.top();
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (s.is_subset_of(sets_[i]) && sets_[i].is_subset_of(sets_[best])) best = i;
  return best;
}

std::string set_name(const std::vector<std::string>& names, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](std::size_t i) {
    if (!first) out += ',';
    out += names.at(i);
    first = false;
  });
  out += '}';
  return out;
}

std::vector<Subset> enumerate_downsets(const Poset& p) {
  const std::size_t n = p.size();
  const auto& order = p.linear_extension();
  std::vector<Subset> found;
  Subset current(n);
  // Elements are decided in linear-extension order, so everything below the
  // element under consideration has already been decided.
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (found.size() >= kMaxDownsets)
        throw Error(ErrorKind::TooLarge, "more than " + std::to_string(kMaxDownsets) + " downsets");
      found.push_back(current);
      return;
    }
    const std::size_t e = order[pos];
    self(self, pos + 1);
    Subset below = p.down(e);
    below.reset(e);
    if (below.is_subset_of(current)) {
      current.set(e);
      self(self, pos + 1);
      current.reset(e);
    }
  };
  recurse(recurse, 0);
  std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members(a) < members(b);
  });
  return found;
}

SetLattice downsets_lattice(const Poset& p) {
  auto found = enumerate_downsets(p);
  std::vector<std::string> names;
  names.reserve(found.size());
  for (const auto& s : found) names.push_back(set_name(p.elements(), s));
  return SetLattice::trusted(std::move(names), std::move(found));
}

SetLattice powerset_lattice(const std::vector<std::string>& names) {
  if (names.size() > 20) throw Error(ErrorKind::TooLarge, "powerset of more than 20 elements");
  const std::size_t count = std::size_t{1} << names.size();
  std::vector<Subset> sets;
  std::vector<std::string> labels;
  sets.reserve(count);
  labels.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    sets.push_back(subset_from_mask(names.size(), mask));
    labels.push_back(set_name(names, sets.back()));
  }
  return SetLattice::trusted(std::move(labels), std::move(sets));
}

}  // namespace pcgc
