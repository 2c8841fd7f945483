#include "pcgc/setops.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace pcgc {

std::string_view to_string(ArithMode mode) {
  switch (mode) {
    case ArithMode::none: return "none";
    case ArithMode::saturating: return "saturating";
    case ArithMode::modular: return "modular";
  }
  return "none";
}

ArithMode parse_arith_mode(std::string_view text) {
  if (text == "none") return ArithMode::none;
  if (text == "saturating") return ArithMode::saturating;
  if (text == "modular") return ArithMode::modular;
  throw Error(ErrorKind::FormatError, "unknown arithmetic mode '" + std::string(text) + "'");
}

Carrier Carrier::atoms(std::vector<std::string> names) {
  Carrier c;
  c.names_ = std::move(names);
  c.finish();
  return c;
}

Carrier Carrier::ints(std::int64_t lo, std::int64_t hi, ArithMode mode) {
  if (hi < lo) throw Error(ErrorKind::ShapeMismatch, "empty integer range");
  if (hi - lo > 1'000'000) throw Error(ErrorKind::TooLarge, "integer carrier too large");
  Carrier c;
  c.integer_ = true;
  c.lo_ = lo;
  c.hi_ = hi;
  c.mode_ = mode;
  for (std::int64_t v = lo; v <= hi; ++v) c.names_.push_back(std::to_string(v));
  c.finish();
  return c;
}

void Carrier::finish() {
  index_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (!index_.emplace(names_[i], i).second)
      throw Error(ErrorKind::DuplicateElement, "carrier value '" + names_[i] + "' listed twice");
  search_order_.resize(names_.size());
  std::iota(search_order_.begin(), search_order_.end(), 0);
  if (integer_) {
    std::stable_sort(search_order_.begin(), search_order_.end(), [&](std::size_t a, std::size_t b) {
      const auto va = value(a), vb = value(b);
      if (std::llabs(va) != std::llabs(vb)) return std::llabs(va) < std::llabs(vb);
      return va > vb;
    });
  }
}

std::size_t Carrier::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownElement, "'" + std::string(name) + "' is not in the carrier");
}

std::optional<std::size_t> Carrier::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t Carrier::value(std::size_t i) const {
  if (!integer_) throw Error(ErrorKind::ShapeMismatch, "atom carrier has no integer values");
  if (i >= size()) throw Error(ErrorKind::UnknownElement, "carrier index out of range");
  return lo_ + static_cast<std::int64_t>(i);
}

std::size_t Carrier::of_value(std::int64_t v) const {
  if (!integer_ || v < lo_ || v > hi_)
    throw Error(ErrorKind::UnknownElement, std::to_string(v) + " is not in the carrier");
  return static_cast<std::size_t>(v - lo_);
}

std::size_t Carrier::normalize(std::int64_t v) const {
  if (!integer_) throw Error(ErrorKind::ShapeMismatch, "atom carrier has no arithmetic");
  switch (mode_) {
    case ArithMode::saturating:
      return of_value(std::clamp(v, lo_, hi_));
    case ArithMode::modular: {
      const std::int64_t span = hi_ - lo_ + 1;
      std::int64_t off = (v - lo_) % span;
      if (off < 0) off += span;
      return static_cast<std::size_t>(off);
    }
    case ArithMode::none:
      break;
  }
  return of_value(v);
}

Subset Carrier::parse_subset(std::string_view text) const {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error(ErrorKind::FormatError, "subset must be written {a,b,...}: '" + std::string(text) + "'");
  Subset s(size());
  std::string_view body = text.substr(1, text.size() - 2);
  if (body.empty()) return s;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    auto item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    s.set(index(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

// ---------------------------------------------------------------------------

Subset lift_diamond(const IndexMap& f, std::size_t codomain_size, const Subset& x) {
  if (x.size() != f.size()) throw Error(ErrorKind::UnknownElement, "subset is not over the map's domain");
  Subset out(codomain_size);
  for_each_member(x, [&](std::size_t e) { out.set(f[e]); });
  return out;
}

Subset lift_star(const SetMap& g, std::size_t codomain_size, const Subset& x) {
  if (x.size() != g.size()) throw Error(ErrorKind::UnknownElement, "subset is not over the map's domain");
  Subset out(codomain_size);
  for_each_member(x, [&](std::size_t e) { out |= g[e]; });
  return out;
}

std::size_t lift_lub(const Lattice& l, const IndexMap& k, const Subset& x) {
  if (x.size() != k.size()) throw Error(ErrorKind::UnknownElement, "subset is not over the map's domain");
  Subset image(l.size());
  for_each_member(x, [&](std::size_t e) { image.set(k[e]); });
  return l.lub(image);
}

Subset lift_singleton(const IndexMap& f, std::size_t codomain_size, std::size_t a) {
  if (a >= f.size()) throw Error(ErrorKind::UnknownElement, "element outside the map's domain");
  return singleton(codomain_size, f[a]);
}

PartitionCheck check_partition(const Carrier& carrier, std::span<const Subset> blocks) {
  PartitionCheck out;
  std::vector<Subset> distinct;
  for (const auto& b : blocks) {
    if (b.size() != carrier.size()) throw Error(ErrorKind::ShapeMismatch, "block is not over the carrier");
    if (std::find(distinct.begin(), distinct.end(), b) == distinct.end()) distinct.push_back(b);
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (distinct[i].none()) {
      out.clause = PartitionCheck::Clause::empty_block;
      return out;
    }
  }
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      Subset common = distinct[i] & distinct[j];
      if (common.any()) {
        out.clause = PartitionCheck::Clause::overlap;
        out.block_pair = {i, j};
        for (auto e : carrier.search_order())
          if (common.test(e)) {
            out.witness = e;
            break;
          }
        return out;
      }
    }
  Subset covered(carrier.size());
  for (const auto& b : distinct) covered |= b;
  for (auto e : carrier.search_order())
    if (!covered.test(e)) {
      out.clause = PartitionCheck::Clause::not_covering;
      out.witness = e;
      return out;
    }
  return out;
}

}  // namespace pcgc
