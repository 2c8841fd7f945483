#include "pcgc/galois.hpp"

#include <algorithm>
#include <set>

namespace pcgc {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::gc: return "gc";
    case Kind::cgc: return "cgc";
    case Kind::cgp: return "cgp";
    case Kind::pcgc: return "pcgc";
    case Kind::cco: return "cco";
    case Kind::pgc: return "pgc";
    case Kind::ppgc: return "ppgc";
    case Kind::derived: return "derived";
  }
  return "derived";
}

Kind parse_kind(std::string_view text) {
  for (Kind k : {Kind::gc, Kind::cgc, Kind::cgp, Kind::pcgc, Kind::cco, Kind::pgc, Kind::ppgc, Kind::derived})
    if (to_string(k) == text) return k;
  throw Error(ErrorKind::FormatError, "unknown connection kind '" + std::string(text) + "'");
}

std::string_view to_string(Partitioning p) {
  switch (p) {
    case Partitioning::pgc: return "PGC";
    case Partitioning::ppgc: return "PPGC";
    case Partitioning::neither: return "neither";
  }
  return "neither";
}

std::string_view to_string(Precision p) {
  switch (p) {
    case Precision::strictly_finer: return "strictly_finer";
    case Precision::strictly_coarser: return "strictly_coarser";
    case Precision::isomorphic: return "isomorphic";
    case Precision::incomparable: return "incomparable";
  }
  return "incomparable";
}

namespace {

void require_order_over(const Poset& order, const Carrier& carrier) {
  if (order.elements() != carrier.names())
    throw Error(ErrorKind::ShapeMismatch, "carrier order is not over the carrier's values");
}

}  // namespace

// ---------------------------------------------------------------------------

ConstructiveConnection::ConstructiveConnection(Kind kind, Carrier carrier, Poset abstract, IndexMap eta, SetMap mu,
                                               std::optional<Poset> carrier_order, Provenance provenance)
    : kind_(kind),
      carrier_(std::move(carrier)),
      carrier_order_(carrier_order ? std::move(*carrier_order) : Poset::discrete(carrier_.names())),
      abstract_(std::move(abstract)),
      lattice_(Lattice::try_from(abstract_)),
      eta_(std::move(eta)),
      mu_(std::move(mu)),
      provenance_(std::move(provenance)) {
  require_order_over(carrier_order_, carrier_);
  if (eta_.size() != carrier_.size())
    throw Error(ErrorKind::ShapeMismatch, "η must be defined on every carrier value");
  for (std::size_t a = 0; a < eta_.size(); ++a)
    if (eta_[a] >= abstract_.size())
      throw Error(ErrorKind::ShapeMismatch, "η(" + carrier_.name(a) + ") is not an abstract value");
  if (mu_.size() != abstract_.size())
    throw Error(ErrorKind::ShapeMismatch, "μ must be defined on every abstract value");
  for (const auto& s : mu_)
    if (s.size() != carrier_.size()) throw Error(ErrorKind::ShapeMismatch, "μ value is not a carrier subset");
}

const Lattice& ConstructiveConnection::require_lattice() const {
  if (!lattice_) throw Error(ErrorKind::NotCompleteLattice, "abstract domain is not a complete lattice");
  return *lattice_;
}

Subset ConstructiveConnection::eta_image() const {
  Subset out(abstract_.size());
  for (auto b : eta_) out.set(b);
  return out;
}

ConstructiveConnection ConstructiveConnection::with_kind(Kind kind, Provenance provenance) const {
  ConstructiveConnection out = *this;
  out.kind_ = kind;
  out.provenance_ = std::move(provenance);
  return out;
}

ConstructiveConnection ConstructiveConnection::with_abstract_order(Poset abstract, Kind kind,
                                                                   Provenance provenance) const {
  if (abstract.elements() != abstract_.elements())
    throw Error(ErrorKind::ShapeMismatch, "new abstract order is over different elements");
  return ConstructiveConnection(kind, carrier_, std::move(abstract), eta_, mu_, carrier_order_,
                                std::move(provenance));
}

ConstructiveConnection ConstructiveConnection::with_carrier_order(Poset carrier_order, Kind kind,
                                                                  Provenance provenance) const {
  return ConstructiveConnection(kind, carrier_, abstract_, eta_, mu_, std::move(carrier_order),
                                std::move(provenance));
}

// ---------------------------------------------------------------------------

namespace {

void check_gamma_shape(const Carrier& carrier, const Lattice& abstract, const SetMap& gamma) {
  if (gamma.size() != abstract.size())
    throw Error(ErrorKind::ShapeMismatch, "γ must be defined on every abstract value");
  for (const auto& s : gamma)
    if (s.size() != carrier.size()) throw Error(ErrorKind::ShapeMismatch, "γ value is not a carrier subset");
}

}  // namespace

GaloisConnection GaloisConnection::from_atoms(Carrier carrier, Poset carrier_order, Lattice abstract,
                                              IndexMap alpha_principal, SetMap gamma, Kind kind,
                                              Provenance provenance) {
  require_order_over(carrier_order, carrier);
  check_gamma_shape(carrier, abstract, gamma);
  if (alpha_principal.size() != carrier.size())
    throw Error(ErrorKind::ShapeMismatch, "α must be given on every principal downset");
  for (auto d : alpha_principal)
    if (d >= abstract.size()) throw Error(ErrorKind::ShapeMismatch, "α value is not an abstract element");
  GaloisConnection g;
  g.kind_ = kind;
  g.carrier_ = std::move(carrier);
  g.carrier_order_ = std::move(carrier_order);
  g.abstract_ = std::move(abstract);
  g.principal_ = std::move(alpha_principal);
  g.gamma_ = std::move(gamma);
  g.provenance_ = std::move(provenance);
  return g;
}

GaloisConnection GaloisConnection::from_table(Carrier carrier, Poset carrier_order, Lattice abstract,
                                              std::unordered_map<Subset, std::size_t, SubsetHash> alpha,
                                              SetMap gamma, Kind kind, Provenance provenance) {
  require_order_over(carrier_order, carrier);
  check_gamma_shape(carrier, abstract, gamma);
  const auto downsets = enumerate_downsets(carrier_order);
  if (alpha.size() != downsets.size())
    throw Error(ErrorKind::ShapeMismatch, "α table must have exactly one entry per concrete element");
  IndexMap principal(carrier.size());
  for (const auto& x : downsets) {
    auto it = alpha.find(x);
    if (it == alpha.end()) throw Error(ErrorKind::ShapeMismatch, "α undefined on " + carrier.format(x));
    if (it->second >= abstract.size()) throw Error(ErrorKind::ShapeMismatch, "α value is not an abstract element");
  }
  for (std::size_t a = 0; a < carrier.size(); ++a) principal[a] = alpha.at(carrier_order.down(a));
  GaloisConnection g;
  g.kind_ = kind;
  g.carrier_ = std::move(carrier);
  g.carrier_order_ = std::move(carrier_order);
  g.abstract_ = std::move(abstract);
  g.principal_ = std::move(principal);
  g.tabulated_ = true;
  g.table_ = std::move(alpha);
  g.gamma_ = std::move(gamma);
  g.provenance_ = std::move(provenance);
  return g;
}

std::size_t GaloisConnection::alpha(const Subset& x) const {
  if (x.size() != carrier_.size()) throw Error(ErrorKind::ShapeMismatch, "argument is not a carrier subset");
  if (tabulated_) {
    auto it = table_.find(x);
    if (it == table_.end())
      throw Error(ErrorKind::ShapeMismatch, carrier_.format(x) + " is not a concrete element");
    return it->second;
  }
  return lift_lub(abstract_, principal_, x);
}

std::size_t GaloisConnection::alpha_principal(std::size_t a) const { return principal_.at(a); }

std::vector<Subset> GaloisConnection::concrete_elements() const { return enumerate_downsets(carrier_order_); }

GaloisConnection GaloisConnection::with_kind(Kind kind, Provenance provenance) const {
  GaloisConnection out = *this;
  out.kind_ = kind;
  out.provenance_ = std::move(provenance);
  return out;
}

// ---------------------------------------------------------------------------

ClosureOp::ClosureOp(Carrier carrier, SetMap phi, Provenance provenance)
    : carrier_(std::move(carrier)), phi_(std::move(phi)), provenance_(std::move(provenance)) {
  if (phi_.size() != carrier_.size()) throw Error(ErrorKind::ShapeMismatch, "φ must be defined on every value");
  for (const auto& s : phi_)
    if (s.size() != carrier_.size()) throw Error(ErrorKind::ShapeMismatch, "φ value is not a carrier subset");
}

// ---------------------------------------------------------------------------

namespace {

// Image of α, i.e. the joins of the principal images (bottom included).
Subset alpha_image(const GaloisConnection& g) {
  const Lattice& d = g.abstract();
  Subset image(d.size());
  if (g.alpha_tabulated()) {
    for (const auto& [x, v] : g.alpha_table()) image.set(v);
    return image;
  }
  image.set(d.bottom());
  for (std::size_t a = 0; a < g.carrier().size(); ++a) image.set(g.alpha_principal(a));
  bool changed = true;
  while (changed) {
    changed = false;
    auto current = members(image);
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        auto v = d.join(current[i], current[j]);
        if (!image.test(v)) {
          image.set(v);
          changed = true;
        }
      }
  }
  return image;
}

std::optional<Witness> disjunctivity_failure(const GaloisConnection& g) {
  const Lattice& d = g.abstract();
  const Carrier& c = g.carrier();
  if (g.gamma(d.bottom()).any())
    return Witness{c.format(g.gamma(d.bottom())), d.name(d.bottom()), "γ(bottom) is not empty"};
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = x + 1; y < d.size(); ++y) {
      const auto j = d.join(x, y);
      if (g.gamma(j) != (g.gamma(x) | g.gamma(y)))
        return Witness{c.format(g.gamma(j)), d.name(x) + "," + d.name(y),
                       "γ(" + d.name(x) + " ∨ " + d.name(y) + ") = γ(" + d.name(j) + ") differs from γ(" +
                           d.name(x) + ") ∪ γ(" + d.name(y) + ")"};
    }
  return std::nullopt;
}

std::optional<Witness> adjunction_failure(const GaloisConnection& g) {
  const Lattice& d = g.abstract();
  const Carrier& c = g.carrier();
  const Poset& order = g.carrier_order();
  for (std::size_t v = 0; v < d.size(); ++v)
    if (!order.is_down_closed(g.gamma(v)))
      return Witness{c.format(g.gamma(v)), d.name(v), "γ(" + d.name(v) + ") is not a concrete element"};

  if (!g.alpha_tabulated()) {
    // α is the join extension of its principal values, so α(X) ≤ d holds iff
    // every a ∈ X has α(↓a) ≤ d; the adjunction reduces to principal downsets.
    for (std::size_t v = 0; v < d.size(); ++v)
      for (auto a : c.search_order()) {
        const bool lhs = d.leq(g.alpha_principal(a), v);
        const bool rhs = g.gamma(v).test(a);
        if (lhs != rhs) {
          const std::string x = c.format(order.down(a));
          return Witness{x, d.name(v),
                         lhs ? "α(" + x + ") = " + d.name(g.alpha_principal(a)) + " ≤ " + d.name(v) + " but " +
                                   c.name(a) + " ∉ γ(" + d.name(v) + ")"
                             : c.name(a) + " ∈ γ(" + d.name(v) + ") but α(" + x + ") = " +
                                   d.name(g.alpha_principal(a)) + " ≰ " + d.name(v)};
        }
      }
    return std::nullopt;
  }
  const auto elements = g.concrete_elements();
  for (std::size_t v = 0; v < d.size(); ++v)
    for (const auto& x : elements) {
      const auto ax = g.alpha(x);
      const bool lhs = d.leq(ax, v);
      const bool rhs = x.is_subset_of(g.gamma(v));
      if (lhs != rhs) {
        const std::string xs = c.format(x);
        return Witness{xs, d.name(v),
                       lhs ? "α(" + xs + ") = " + d.name(ax) + " ≤ " + d.name(v) + " but " + xs + " ⊄ γ(" +
                                 d.name(v) + ")"
                           : xs + " ⊆ γ(" + d.name(v) + ") but α(" + xs + ") = " + d.name(ax) + " ≰ " + d.name(v)};
      }
    }
  return std::nullopt;
}

}  // namespace

GcReport check_gc(const GaloisConnection& g) {
  GcReport r;
  r.witness = adjunction_failure(g);
  r.is_gc = !r.witness;
  const Lattice& d = g.abstract();
  if (r.is_gc) {
    const Subset image = alpha_image(g);
    r.is_gi = image.all();
    if (!r.is_gi) {
      for (std::size_t v = 0; v < d.size(); ++v)
        if (!image.test(v)) {
          r.witness = Witness{"", d.name(v), d.name(v) + " is not in the image of α"};
          break;
        }
    }
  }
  auto disj = disjunctivity_failure(g);
  r.is_disjunctive = !disj;
  if (!r.witness && disj) r.witness = std::move(disj);
  return r;
}

bool cgc_corr_holds_at(const ConstructiveConnection& c, std::size_t x, std::size_t y) {
  return c.mu(y).test(x) == (c.eta(x) == y);
}

Check check_cgc(const ConstructiveConnection& c) {
  const auto& B = c.abstract();
  const auto& A = c.carrier();
  for (std::size_t y = 0; y < B.size(); ++y)
    for (auto x : A.search_order()) {
      if (cgc_corr_holds_at(c, x, y)) continue;
      const std::string eta = B.name(c.eta(x));
      return Check::fail({A.name(x), B.name(y),
                          c.mu(y).test(x) ? A.name(x) + " ∈ μ(" + B.name(y) + ") but η(" + A.name(x) + ") = " + eta +
                                                " ≠ " + B.name(y)
                                          : "η(" + A.name(x) + ") = " + eta + " but " + A.name(x) + " ∉ μ(" +
                                                B.name(y) + ")"});
    }
  return Check::pass();
}

namespace {

std::optional<Witness> cgp_corr_failure(const ConstructiveConnection& c) {
  const auto& B = c.abstract();
  const auto& A = c.carrier();
  for (std::size_t y = 0; y < B.size(); ++y)
    for (auto x : A.search_order()) {
      const bool in = c.mu(y).test(x);
      const bool below = B.leq(c.eta(x), y);
      if (in == below) continue;
      const std::string eta = B.name(c.eta(x));
      return Witness{A.name(x), B.name(y),
                     in ? A.name(x) + " ∈ μ(" + B.name(y) + ") but η(" + A.name(x) + ") = " + eta + " ≰ " +
                              B.name(y)
                        : "η(" + A.name(x) + ") = " + eta + " ≤ " + B.name(y) + " but " + A.name(x) + " ∉ μ(" +
                              B.name(y) + ")"};
    }
  return std::nullopt;
}

std::optional<Witness> eta_monotonicity_failure(const ConstructiveConnection& c) {
  const auto& order = c.carrier_order();
  const auto& A = c.carrier();
  const auto& B = c.abstract();
  for (auto x : A.search_order())
    for (auto x2 : A.search_order())
      if (x != x2 && order.leq(x, x2) && !B.leq(c.eta(x), c.eta(x2)))
        return Witness{A.name(x) + "," + A.name(x2), B.name(c.eta(x)),
                       A.name(x) + " ≤ " + A.name(x2) + " but η(" + A.name(x) + ") ≰ η(" + A.name(x2) + ")"};
  return std::nullopt;
}

}  // namespace

Check check_cgp(const ConstructiveConnection& c) {
  if (auto w = cgp_corr_failure(c)) return Check::fail(*w);
  const auto& B = c.abstract();
  const auto& A = c.carrier();
  for (std::size_t y = 0; y < B.size(); ++y)
    if (!c.carrier_order().is_down_closed(c.mu(y)))
      return Check::fail({A.format(c.mu(y)), B.name(y), "μ(" + B.name(y) + ") is not downward closed"});
  if (auto w = eta_monotonicity_failure(c)) return Check::fail(*w);
  for (std::size_t y = 0; y < B.size(); ++y)
    for (std::size_t y2 = 0; y2 < B.size(); ++y2)
      if (y != y2 && B.leq(y, y2) && !c.mu(y).is_subset_of(c.mu(y2)))
        return Check::fail({"", B.name(y) + "," + B.name(y2),
                            B.name(y) + " ≤ " + B.name(y2) + " but μ(" + B.name(y) + ") ⊄ μ(" + B.name(y2) + ")"});
  return Check::pass();
}

PcgcReport check_pcgc(const ConstructiveConnection& c) {
  PcgcReport r;
  const auto& B = c.abstract();
  const auto& A = c.carrier();
  const Subset image = c.eta_image();

  r.cond1 = true;
  for (std::size_t y = 0; y < B.size() && r.cond1; ++y) {
    if (!image.test(y)) continue;
    std::size_t source = 0;
    for (auto x : A.search_order())
      if (c.eta(x) == y) {
        source = x;
        break;
      }
    for (auto x : A.search_order()) {
      if (cgc_corr_holds_at(c, x, y)) continue;
      const std::string eta = B.name(c.eta(x));
      const std::string at = "μ(η(" + A.name(source) + ")) = μ(" + B.name(y) + ")";
      r.cond1 = false;
      r.witness1 = Witness{A.name(x), B.name(y),
                           c.mu(y).test(x) ? A.name(x) + " ∈ " + at + " but η(" + A.name(x) + ") = " + eta +
                                                 " ≠ η(" + A.name(source) + ") = " + B.name(y)
                                           : "η(" + A.name(x) + ") = η(" + A.name(source) + ") but " + A.name(x) +
                                                 " ∉ " + at};
      break;
    }
  }

  auto w2 = cgp_corr_failure(c);
  r.cond2 = !w2;
  r.witness2 = std::move(w2);

  if (!c.carrier_order().is_discrete()) {
    auto wm = eta_monotonicity_failure(c);
    r.eta_monotone = !wm;
    if (wm && !r.witness2) r.witness2 = std::move(wm);
  }
  return r;
}

Check check_cco(const ClosureOp& op) {
  const auto& A = op.carrier();
  for (auto y : A.search_order())
    for (auto x : A.search_order()) {
      const bool in = op.phi(y).test(x);
      const bool same = op.phi(x) == op.phi(y);
      if (in == same) continue;
      return Check::fail({A.name(x), A.name(y),
                          in ? A.name(x) + " ∈ φ(" + A.name(y) + ") but φ(" + A.name(x) + ") ≠ φ(" + A.name(y) + ")"
                             : "φ(" + A.name(x) + ") = φ(" + A.name(y) + ") but " + A.name(x) + " ∉ φ(" +
                                   A.name(y) + ")"});
    }
  return Check::pass();
}

// ---------------------------------------------------------------------------

std::vector<Subset> prt(const GaloisConnection& g) {
  if (!g.over_powerset()) throw Error(ErrorKind::ShapeMismatch, "prt needs a powerset concrete domain");
  std::vector<Subset> blocks;
  const auto n = g.carrier().size();
  for (std::size_t a = 0; a < n; ++a) {
    Subset b = g.gamma(g.alpha(singleton(n, a)));
    if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) blocks.push_back(std::move(b));
  }
  return blocks;
}

PartitioningReport classify_partitioning(const GaloisConnection& g) {
  PartitioningReport r;
  const auto blocks = prt(g);
  r.partition = check_partition(g.carrier(), blocks);
  r.additive = !disjunctivity_failure(g);
  const Lattice& d = g.abstract();
  r.alt2prime = true;
  for (std::size_t x = 0; x < d.size() && r.alt2prime; ++x)
    for (std::size_t y = x + 1; y < d.size(); ++y)
      if (!d.poset().comparable(x, y) && !g.gamma(d.join(x, y)).all()) {
        r.alt2prime = false;
        break;
      }
  if (r.partition.ok()) r.kind = r.additive ? Partitioning::pgc : Partitioning::ppgc;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Subset> sorted_distinct(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_same_carrier(const Carrier& a, const Carrier& b) {
  if (!(a == b)) throw Error(ErrorKind::ShapeMismatch, "connections are over different carriers");
}

}  // namespace

std::vector<Subset> concretization_image(const GaloisConnection& g) {
  std::vector<Subset> out;
  const Subset image = alpha_image(g);
  for_each_member(image, [&](std::size_t v) { out.push_back(g.gamma(v)); });
  return sorted_distinct(std::move(out));
}

std::vector<Subset> concretization_image(const ConstructiveConnection& c) {
  return sorted_distinct(c.mu_table());
}

Precision compare_images(const std::vector<Subset>& first, const std::vector<Subset>& second) {
  const std::set<Subset> a(first.begin(), first.end());
  const std::set<Subset> b(second.begin(), second.end());
  const bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
  const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
  if (a_in_b && b_in_a) return Precision::isomorphic;
  if (b_in_a) return Precision::strictly_finer;
  if (a_in_b) return Precision::strictly_coarser;
  return Precision::incomparable;
}

Precision precision_cmp(const GaloisConnection& a, const GaloisConnection& b) {
  require_same_carrier(a.carrier(), b.carrier());
  return compare_images(concretization_image(a), concretization_image(b));
}

bool cgc_refines(const ConstructiveConnection& a, const ConstructiveConnection& b) {
  require_same_carrier(a.carrier(), b.carrier());
  const auto finer = concretization_image(a);
  for (const auto& target : concretization_image(b)) {
    if (target.none()) continue;
    Subset covered(target.size());
    for (const auto& block : finer)
      if (block.any() && block.is_subset_of(target)) covered |= block;
    if (covered != target) return false;
  }
  return true;
}

Precision precision_cmp(const ConstructiveConnection& a, const ConstructiveConnection& b) {
  const bool ab = cgc_refines(a, b);
  const bool ba = cgc_refines(b, a);
  if (ab && ba) return Precision::isomorphic;
  if (ab) return Precision::strictly_finer;
  if (ba) return Precision::strictly_coarser;
  return Precision::incomparable;
}

bool nonempty_iso(const ConstructiveConnection& a, const ConstructiveConnection& b) {
  require_same_carrier(a.carrier(), b.carrier());
  auto ia = concretization_image(a);
  auto ib = concretization_image(b);
  ia.push_back(a.carrier().empty());
  ib.push_back(b.carrier().empty());
  return sorted_distinct(std::move(ia)) == sorted_distinct(std::move(ib));
}

namespace {

std::map<std::size_t, std::size_t> build_renaming(const ConstructiveConnection& from,
                                                  const ConstructiveConnection& to) {
  std::map<std::size_t, std::size_t> f;
  const auto& A = from.carrier();
  for (auto a : A.search_order()) {
    const auto b1 = from.eta(a);
    if (f.count(b1)) continue;
    const Subset& block = from.mu(b1);
    bool found = false;
    for (auto x : A.search_order())
      if (to.mu(to.eta(x)) == block) {
        f[b1] = to.eta(x);
        found = true;
        break;
      }
    if (!found)
      throw Error(ErrorKind::NotIsomorphic, "no counterpart for " + from.abstract().name(b1) + " = " +
                                                A.format(block));
  }
  return f;
}

}  // namespace

Renaming renaming_witnesses(const ConstructiveConnection& a, const ConstructiveConnection& b) {
  if (!nonempty_iso(a, b))
    throw Error(ErrorKind::NotIsomorphic, "concretization images differ beyond the empty set");
  return {build_renaming(a, b), build_renaming(b, a)};
}

bool verify_renaming(const ConstructiveConnection& a, const ConstructiveConnection& b, const Renaming& r) {
  require_same_carrier(a.carrier(), b.carrier());
  const Subset img1 = a.eta_image();
  const Subset img2 = b.eta_image();
  if (r.forward.size() != img1.count() || r.backward.size() != img2.count()) return false;
  for (const auto& [x, y] : r.forward) {
    if (!img1.test(x) || y >= img2.size() || !img2.test(y)) return false;
    auto back = r.backward.find(y);
    if (back == r.backward.end() || back->second != x) return false;
  }
  for (const auto& [y, x] : r.backward) {
    if (!img2.test(y) || x >= img1.size() || !img1.test(x)) return false;
    auto fwd = r.forward.find(x);
    if (fwd == r.forward.end() || fwd->second != y) return false;
  }
  for (std::size_t x = 0; x < a.carrier().size(); ++x) {
    if (a.mu(a.eta(x)) != b.mu(r.forward.at(a.eta(x)))) return false;
    if (b.mu(b.eta(x)) != a.mu(r.backward.at(b.eta(x)))) return false;
  }
  return true;
}

bool is_cgi(const ConstructiveConnection& c) { return c.eta_image().all(); }

ConstructiveConnection embed_cgc_to_pcgc(const ConstructiveConnection& c) {
  if (auto chk = check_cgc(c); !chk)
    throw Error(ErrorKind::NotInClass, "not a CGC: " + chk.witness->detail);
  auto out = c.with_abstract_order(Poset::discrete(c.abstract().elements()), Kind::pcgc,
                                   {std::string(to_string(c.kind())), "embed_cgc_to_pcgc"});
  if (!check_pcgc(out).ok()) throw Error(ErrorKind::InvariantViolated, "embedded CGC fails the PCGC checker");
  return out;
}

ConstructiveConnection embed_pcgc_to_cgp(const ConstructiveConnection& c) {
  if (!c.carrier_order().is_discrete())
    throw Error(ErrorKind::NotInClass, "a PCGC has a discrete carrier order");
  auto report = check_pcgc(c);
  if (!report.ok()) {
    const auto& w = report.witness1 ? report.witness1 : report.witness2;
    throw Error(ErrorKind::NotInClass, "not a PCGC" + (w ? ": " + w->detail : std::string()));
  }
  auto out = c.with_carrier_order(Poset::discrete(c.carrier().names()), Kind::cgp,
                                  {std::string(to_string(c.kind())), "embed_pcgc_to_cgp"});
  if (auto chk = check_cgp(out); !chk)
    throw Error(ErrorKind::InvariantViolated, "embedded PCGC fails the CGP checker: " + chk.witness->detail);
  return out;
}

}  // namespace pcgc
