#include "pcgc/functions.hpp"

#include "pcgc/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pcgc {

FnTable FnTable::make(int arity, std::size_t n, IndexMap table) {
  if (arity != 1 && arity != 2) throw Error(ErrorKind::ShapeMismatch, "arity must be 1 or 2");
  const std::size_t expected = arity == 1 ? n : n * n;
  if (table.size() != expected)
    throw Error(ErrorKind::ShapeMismatch, "function table has " + std::to_string(table.size()) + " entries, expected " +
                                              std::to_string(expected));
  for (auto v : table)
    if (v >= n) throw Error(ErrorKind::ShapeMismatch, "function value outside its domain");
  return FnTable{arity, n, std::move(table)};
}

FnTable FnTable::identity(std::size_t n) {
  IndexMap t(n);
  std::iota(t.begin(), t.end(), 0);
  return FnTable{1, n, std::move(t)};
}

FnTable FnTable::constant(int arity, std::size_t n, std::size_t value) {
  return make(arity, n, IndexMap(arity == 1 ? n : n * n, value));
}

std::size_t FnTable::apply(const std::vector<std::size_t>& args) const {
  if (args.size() != static_cast<std::size_t>(arity)) throw Error(ErrorKind::ShapeMismatch, "wrong number of arguments");
  return arity == 1 ? table[args[0]] : table[args[0] * n + args[1]];
}

ConcreteFn int_unary(const Carrier& carrier, const std::function<std::int64_t(std::int64_t)>& f) {
  IndexMap t(carrier.size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = carrier.normalize(f(carrier.value(a)));
  return FnTable{1, carrier.size(), std::move(t)};
}

ConcreteFn int_binary(const Carrier& carrier, const std::function<std::int64_t(std::int64_t, std::int64_t)>& f) {
  const auto n = carrier.size();
  IndexMap t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = carrier.normalize(f(carrier.value(a), carrier.value(b)));
  return FnTable{2, n, std::move(t)};
}

LatticeFn lift(const ConcreteFn& f) {
  if (f.arity != 1) throw Error(ErrorKind::ShapeMismatch, "only unary functions lift to the concrete lattice");
  return [f](const Subset& x) { return lift_diamond(f.table, f.n, x); };
}

std::string_view to_string(GcProperty p) {
  switch (p) {
    case GcProperty::sound: return "sound";
    case GcProperty::optimal: return "optimal";
    case GcProperty::backward_complete: return "backward_complete";
    case GcProperty::forward_complete: return "forward_complete";
    case GcProperty::precise: return "precise";
  }
  return "sound";
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::eta_mu: return "ημ";
    case Variant::mu_mu: return "μμ";
    case Variant::eta_eta: return "ηη";
    case Variant::mu_eta: return "μη";
    case Variant::all: return "all";
  }
  return "all";
}

Variant parse_variant(std::string_view text) {
  if (text == "ημ" || text == "eta_mu" || text == "etamu") return Variant::eta_mu;
  if (text == "μμ" || text == "mu_mu" || text == "mumu") return Variant::mu_mu;
  if (text == "ηη" || text == "eta_eta" || text == "etaeta") return Variant::eta_eta;
  if (text == "μη" || text == "mu_eta" || text == "mueta") return Variant::mu_eta;
  if (text == "all") return Variant::all;
  throw Error(ErrorKind::FormatError, "unknown variant '" + std::string(text) + "'");
}

std::string_view to_string(PcgcProperty p) {
  switch (p) {
    case PcgcProperty::optimal: return "optimal";
    case PcgcProperty::backward_complete: return "backward_complete";
    case PcgcProperty::forward_complete: return "forward_complete";
  }
  return "optimal";
}

namespace {

using Tuple = std::vector<std::size_t>;

// Calls fn on every tuple of the cartesian product of `choices` in
// lexicographic order; stops early when fn returns false. Returns whether
// the enumeration ran to completion.
template <typename Fn>
bool for_tuples(const std::vector<std::vector<std::size_t>>& choices, Fn&& fn) {
  Tuple cur(choices.size());
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == choices.size()) return fn(static_cast<const Tuple&>(cur));
    for (auto v : choices[i]) {
      cur[i] = v;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

std::vector<std::size_t> in_search_order(const Carrier& A, const Subset& s) {
  std::vector<std::size_t> out;
  for (auto a : A.search_order())
    if (s.test(a)) out.push_back(a);
  return out;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::string tuple_name(const std::vector<std::string>& names, const Tuple& t) {
  if (t.size() == 1) return names[t[0]];
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + names[t[i]];
  return out + ")";
}

Tuple map_tuple(const IndexMap& f, const Tuple& t) {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = f[t[i]];
  return out;
}

void require_pair_shape(const ConstructiveConnection& c, const FnPair& p) {
  if (p.f.arity != p.f_sharp.arity) throw Error(ErrorKind::ShapeMismatch, "concrete and abstract arities differ");
  if (p.f.n != c.carrier().size()) throw Error(ErrorKind::ShapeMismatch, "concrete function is not over the carrier");
  if (p.f_sharp.n != c.abstract().size())
    throw Error(ErrorKind::ShapeMismatch, "abstract function is not over the abstract domain");
}

PropertyCheck fail(Witness w, bool exhaustive = true) { return PropertyCheck{false, exhaustive, std::move(w)}; }

// --- concrete samples -------------------------------------------------------

Subset random_subset(std::mt19937_64& rng, std::size_t n) {
  Subset s(n);
  const auto k = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  auto idx = iota_vec(n);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = std::uniform_int_distribution<std::size_t>(i, n - 1)(rng);
    std::swap(idx[i], idx[j]);
    s.set(idx[i]);
  }
  return s;
}

struct Sample {
  std::vector<Subset> sets;
  bool exhaustive = true;
};

// Concrete lattice elements: all of them when there are few, otherwise the
// empty set, every singleton and pair, and seeded random subsets (each closed
// downward under `order`).
Sample concrete_sample(const Poset& order) {
  const auto n = order.size();
  if (n <= 12) return {enumerate_downsets(order), true};
  Sample s;
  s.exhaustive = false;
  s.sets.push_back(Subset(n));
  for (std::size_t a = 0; a < n; ++a) s.sets.push_back(order.down(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) s.sets.push_back(order.down(a) | order.down(b));
  std::mt19937_64 rng(kSampleSeed);
  for (std::size_t i = 0; i < kExhaustiveLimit; ++i) s.sets.push_back(down_closure(order, random_subset(rng, n)));
  return s;
}

// Visits pairs of concrete subsets: all of them for carriers of at most 8
// values, otherwise every combination of empty/singleton/pair arguments with
// at least one side small, plus seeded random pairs. Stops when fn returns
// false. Returns whether the visit was exhaustive.
template <typename Fn>
bool for_pair_sample(std::size_t n, Fn&& fn) {
  if (n <= 8) {
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t x = 0; x < total; ++x) {
      const Subset sx = subset_from_mask(n, x);
      for (std::size_t y = 0; y < total; ++y)
        if (!fn(sx, subset_from_mask(n, y))) return true;
    }
    return true;
  }
  std::vector<Subset> small{Subset(n)};
  for (std::size_t a = 0; a < n; ++a) small.push_back(singleton(n, a));
  for (const auto& x : small)
    for (const auto& y : small)
      if (!fn(x, y)) return false;
  Subset p(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      p.reset();
      p.set(a);
      p.set(b);
      for (std::size_t i = 1; i < small.size(); ++i)
        if (!fn(small[i], p) || !fn(p, small[i])) return false;
    }
  std::mt19937_64 rng(kSampleSeed);
  for (std::size_t i = 0; i < kExhaustiveLimit; ++i) {
    const Subset x = random_subset(rng, n);
    const Subset y = random_subset(rng, n);
    if (!fn(x, y)) return false;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

AbstractFn bca_gc(const GaloisConnection& g, const LatticeFn& f) {
  const Lattice& d = g.abstract();
  IndexMap t(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) {
    Subset image = f(g.gamma(v));
    if (image.size() != g.carrier().size())
      throw Error(ErrorKind::ShapeMismatch, "function result is not a carrier subset");
    t[v] = g.alpha(image);
  }
  return FnTable{1, d.size(), std::move(t)};
}

PropertyCheck gc_pair_property(const GaloisConnection& g, const GcFnPair& pair, GcProperty property) {
  const Lattice& d = g.abstract();
  const Carrier& A = g.carrier();
  const AbstractFn& fs = pair.f_sharp;
  if (fs.arity != 1 || fs.n != d.size())
    throw Error(ErrorKind::ShapeMismatch, "abstract function is not a unary function on the abstract lattice");

  switch (property) {
    case GcProperty::sound:
    case GcProperty::optimal: {
      const bool strict = property == GcProperty::optimal;
      for (std::size_t v = 0; v < d.size(); ++v) {
        const Subset fx = pair.f(g.gamma(v));
        const auto best = g.alpha(fx);
        const bool ok = strict ? best == fs(v) : d.leq(best, fs(v));
        if (!ok)
          return fail({A.format(fx), d.name(v),
                       "α(f(γ(" + d.name(v) + "))) = α(" + A.format(fx) + ") = " + d.name(best) +
                           (strict ? " ≠ " : " ≰ ") + "f♯(" + d.name(v) + ") = " + d.name(fs(v))});
      }
      return {};
    }
    case GcProperty::forward_complete: {
      for (std::size_t v = 0; v < d.size(); ++v) {
        const Subset lhs = pair.f(g.gamma(v));
        const Subset& rhs = g.gamma(fs(v));
        if (lhs != rhs)
          return fail({A.format(lhs), d.name(v),
                       "f(γ(" + d.name(v) + ")) = " + A.format(lhs) + " ≠ γ(f♯(" + d.name(v) + ")) = γ(" +
                           d.name(fs(v)) + ") = " + A.format(rhs)});
      }
      return {};
    }
    case GcProperty::backward_complete:
    case GcProperty::precise: {
      const Sample sample = concrete_sample(g.carrier_order());
      for (const auto& x : sample.sets) {
        const Subset fx = pair.f(x);
        const auto ax = g.alpha(x);
        if (property == GcProperty::backward_complete) {
          const auto lhs = g.alpha(fx);
          if (lhs != fs(ax))
            return fail({A.format(x), d.name(ax),
                         "α(f(" + A.format(x) + ")) = " + d.name(lhs) + " ≠ f♯(α(" + A.format(x) + ")) = f♯(" +
                             d.name(ax) + ") = " + d.name(fs(ax))},
                        sample.exhaustive);
        } else {
          const Subset& rhs = g.gamma(fs(ax));
          if (fx != rhs)
            return fail({A.format(x), d.name(ax),
                         "f(" + A.format(x) + ") = " + A.format(fx) + " ≠ γ(f♯(α(" + A.format(x) + "))) = " +
                             A.format(rhs)},
                        sample.exhaustive);
        }
      }
      return {true, sample.exhaustive, std::nullopt};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

struct CgcView {
  const ConstructiveConnection& c;
  const FnPair& p;

  const Carrier& A() const { return c.carrier(); }
  const Poset& B() const { return c.abstract(); }
  std::size_t arity() const { return static_cast<std::size_t>(p.f.arity); }

  std::vector<std::vector<std::size_t>> abstract_args() const {
    return std::vector<std::vector<std::size_t>>(arity(), iota_vec(B().size()));
  }
  std::vector<std::vector<std::size_t>> concrete_args() const {
    return std::vector<std::vector<std::size_t>>(arity(), A().search_order());
  }
  std::vector<std::vector<std::size_t>> mu_args(const Tuple& ys) const {
    std::vector<std::vector<std::size_t>> out;
    for (auto y : ys) out.push_back(in_search_order(A(), c.mu(y)));
    return out;
  }
  std::string cname(const Tuple& t) const { return tuple_name(A().names(), t); }
  std::string aname(const Tuple& t) const { return tuple_name(B().elements(), t); }
  std::string aname(std::size_t b) const { return B().name(b); }
  std::string xname(std::size_t a) const { return A().name(a); }
};

PropertyCheck soundness_form(const CgcView& v, Variant variant) {
  const auto& c = v.c;
  const auto& f = v.p.f;
  const auto& fs = v.p.f_sharp;
  std::optional<Witness> w;
  if (variant == Variant::eta_mu || variant == Variant::mu_mu) {
    for_tuples(v.abstract_args(), [&](const Tuple& ys) {
      const auto target = fs.apply(ys);
      return for_tuples(v.mu_args(ys), [&](const Tuple& xs) {
        const auto fx = f.apply(xs);
        const bool ok = variant == Variant::eta_mu ? c.eta(fx) == target : c.mu(target).test(fx);
        if (ok) return true;
        const std::string chain = "x = " + v.cname(xs) + " ∈ μ(" + v.aname(ys) + "), f(x) = " + v.xname(fx) +
                                  ", η(f(x)) = " + v.aname(c.eta(fx)) + ", f♯(" + v.aname(ys) +
                                  ") = " + v.aname(target) + ", μ(" + v.aname(target) + ") = " +
                                  v.A().format(c.mu(target));
        w = Witness{v.cname(xs), v.aname(ys), chain};
        return false;
      });
    });
  } else {
    for_tuples(v.concrete_args(), [&](const Tuple& xs) {
      const auto fx = f.apply(xs);
      const Tuple ys = map_tuple(c.eta_table(), xs);
      const auto target = fs.apply(ys);
      const bool ok = variant == Variant::eta_eta ? c.eta(fx) == target : c.mu(target).test(fx);
      if (ok) return true;
      const std::string chain = "x = " + v.cname(xs) + ", f(x) = " + v.xname(fx) + ", η(x) = " + v.aname(ys) +
                                ", f♯(η(x)) = " + v.aname(target) + ", η(f(x)) = " + v.aname(c.eta(fx)) +
                                ", μ(f♯(η(x))) = " + v.A().format(c.mu(target));
      w = Witness{v.cname(xs), v.aname(ys), chain};
      return false;
    });
  }
  if (w) return fail(std::move(*w));
  return {};
}

}  // namespace

PropertyCheck cgc_soundness(const ConstructiveConnection& c, const FnPair& pair, Variant variant) {
  require_pair_shape(c, pair);
  const CgcView v{c, pair};
  if (variant != Variant::all) return soundness_form(v, variant);
  PropertyCheck first;
  bool have_first = false;
  for (Variant each : {Variant::eta_mu, Variant::mu_mu, Variant::eta_eta, Variant::mu_eta}) {
    auto r = soundness_form(v, each);
    if (!have_first) {
      first = r;
      have_first = true;
    } else if (r.ok != first.ok) {
      throw Error(ErrorKind::InvariantViolated,
                  "soundness forms disagree: ημ gives " + std::string(first.ok ? "sound" : "unsound") + ", " +
                      std::string(to_string(each)) + " gives " + (r.ok ? "sound" : "unsound"));
    }
  }
  return first;
}

PropertyCheck cgc_completeness(const ConstructiveConnection& c, const FnPair& pair, Variant variant) {
  require_pair_shape(c, pair);
  if (variant == Variant::all) throw Error(ErrorKind::ShapeMismatch, "completeness forms are checked one at a time");
  const CgcView v{c, pair};
  const auto& f = pair.f;
  const auto& fs = pair.f_sharp;
  const auto& A = c.carrier();
  const auto& B = c.abstract();
  std::optional<Witness> w;
  if (variant == Variant::eta_mu || variant == Variant::mu_mu) {
    for_tuples(v.abstract_args(), [&](const Tuple& ys) {
      const auto target = fs.apply(ys);
      Subset image(A.size());
      for_tuples(v.mu_args(ys), [&](const Tuple& xs) {
        image.set(f.apply(xs));
        return true;
      });
      if (variant == Variant::eta_mu) {
        const Subset abs = lift_diamond(c.eta_table(), B.size(), image);
        if (abs == singleton(B.size(), target)) return true;
        w = Witness{A.format(image), v.aname(ys),
                    "f◇(μ(" + v.aname(ys) + ")) = " + A.format(image) + ", η◇ of it = " +
                        set_name(B.elements(), abs) + " ≠ {f♯(" + v.aname(ys) + ")} = {" + v.aname(target) + "}"};
      } else {
        if (image == c.mu(target)) return true;
        w = Witness{A.format(image), v.aname(ys),
                    "f◇(μ(" + v.aname(ys) + ")) = " + A.format(image) + " ≠ μ(f♯(" + v.aname(ys) + ")) = μ(" +
                        v.aname(target) + ") = " + A.format(c.mu(target))};
      }
      return false;
    });
  } else {
    for_tuples(v.concrete_args(), [&](const Tuple& xs) {
      const auto fx = f.apply(xs);
      const Tuple ys = map_tuple(c.eta_table(), xs);
      const auto target = fs.apply(ys);
      const bool ok = variant == Variant::eta_eta ? c.eta(fx) == target : c.mu(target) == singleton(A.size(), fx);
      if (ok) return true;
      w = Witness{v.cname(xs), v.aname(ys),
                  "x = " + v.cname(xs) + ", f(x) = " + v.xname(fx) + ", η(x) = " + v.aname(ys) +
                      ", f♯(η(x)) = " + v.aname(target) + ", η(f(x)) = " + v.aname(c.eta(fx)) +
                      ", μ(f♯(η(x))) = " + A.format(c.mu(target))};
      return false;
    });
  }
  if (w) return fail(std::move(*w));
  return {};
}

// ---------------------------------------------------------------------------

namespace {

const Lattice& require_pcgc_lattice(const ConstructiveConnection& c) {
  const Lattice& l = c.require_lattice();
  if (auto r = check_pcgc(c); !r.ok()) {
    const auto& w = r.witness1 ? r.witness1 : r.witness2;
    throw Error(ErrorKind::NotInClass, "not a PCGC" + (w ? ": " + w->detail : std::string()));
  }
  return l;
}

// Every abstract tuple in declaration order.
std::size_t tuple_count(std::size_t n, int arity) { return arity == 1 ? n : n * n; }

Tuple decode(std::size_t code, std::size_t n, int arity) {
  if (arity == 1) return {code};
  return {code / n, code % n};
}

AbstractFn bca_unchecked(const ConstructiveConnection& c, const Lattice& l, const ConcreteFn& f) {
  const auto nb = c.abstract().size();
  const auto na = c.carrier().size();
  if (f.n != na) throw Error(ErrorKind::ShapeMismatch, "concrete function is not over the carrier");
  IndexMap t(tuple_count(nb, f.arity));
  std::vector<std::vector<std::size_t>> mu_members(nb);
  for (std::size_t b = 0; b < nb; ++b) mu_members[b] = members(c.mu(b));
  Subset acc(nb);
  for (std::size_t code = 0; code < t.size(); ++code) {
    acc.reset();
    if (f.arity == 1) {
      for (auto a : mu_members[code]) acc.set(c.eta(f(a)));
    } else {
      const auto b1 = code / nb, b2 = code % nb;
      for (auto a1 : mu_members[b1])
        for (auto a2 : mu_members[b2]) acc.set(c.eta(f(a1, a2)));
    }
    t[code] = l.lub(acc);
  }
  return FnTable{f.arity, nb, std::move(t)};
}

}  // namespace

AbstractFn bca_pcgc(const ConstructiveConnection& c, const ConcreteFn& f) {
  return bca_unchecked(c, require_pcgc_lattice(c), f);
}

PropertyCheck pcgc_sound(const ConstructiveConnection& c, const FnPair& pair) {
  require_pair_shape(c, pair);
  const Lattice& l = require_pcgc_lattice(c);
  const auto& A = c.carrier();
  const auto& B = c.abstract();
  const CgcView v{c, pair};

  // Form 1, straight from the order: η(a) ≤ b ⇒ η(f(a)) ≤ f♯(b).
  std::vector<std::vector<std::size_t>> above(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) above[a] = members(B.up(c.eta(a)));
  std::optional<Witness> w1;
  for_tuples(v.concrete_args(), [&](const Tuple& xs) {
    std::vector<std::vector<std::size_t>> bs;
    for (auto x : xs) bs.push_back(above[x]);
    const auto fx = pair.f.apply(xs);
    return for_tuples(bs, [&](const Tuple& ys) {
      const auto target = pair.f_sharp.apply(ys);
      if (B.leq(c.eta(fx), target)) return true;
      w1 = Witness{v.cname(xs), v.aname(ys),
                   "η(" + v.cname(xs) + ") ≤ " + v.aname(ys) + " but η(f(" + v.cname(xs) + ")) = η(" + A.name(fx) +
                       ") = " + B.name(c.eta(fx)) + " ≰ f♯(" + v.aname(ys) + ") = " + B.name(target)};
      return false;
    });
  });

  // Form 2: f_C ≤ f♯ pointwise.
  const AbstractFn best = bca_unchecked(c, l, pair.f);
  std::optional<Witness> w2;
  for (std::size_t code = 0; code < best.table.size() && !w2; ++code)
    if (!B.leq(best.table[code], pair.f_sharp.table[code])) {
      const Tuple ys = decode(code, B.size(), pair.f.arity);
      w2 = Witness{"", v.aname(ys),
                   "f_C(" + v.aname(ys) + ") = " + B.name(best.table[code]) + " ≰ f♯(" + v.aname(ys) +
                       ") = " + B.name(pair.f_sharp.table[code])};
    }

  if (bool(w1) != bool(w2))
    throw Error(ErrorKind::InvariantViolated, "the two PCGC soundness forms disagree");
  if (w1) return fail(std::move(*w1));
  return {};
}

PropertyCheck pcgc_pair_property(const ConstructiveConnection& c, const FnPair& pair, PcgcProperty property) {
  require_pair_shape(c, pair);
  const Lattice& l = require_pcgc_lattice(c);
  const auto& A = c.carrier();
  const auto& B = c.abstract();
  const CgcView v{c, pair};
  const auto& f = pair.f;
  const auto& fs = pair.f_sharp;

  switch (property) {
    case PcgcProperty::optimal: {
      const AbstractFn best = bca_unchecked(c, l, f);
      for (std::size_t code = 0; code < best.table.size(); ++code)
        if (best.table[code] != fs.table[code]) {
          const Tuple ys = decode(code, B.size(), f.arity);
          return fail({"", v.aname(ys),
                       "η∨(f◇(μ(" + v.aname(ys) + "))) = " + B.name(best.table[code]) + " ≠ f♯(" + v.aname(ys) +
                           ") = " + B.name(fs.table[code])});
        }
      return {};
    }
    case PcgcProperty::forward_complete: {
      for (std::size_t code = 0; code < tuple_count(B.size(), f.arity); ++code) {
        const Tuple ys = decode(code, B.size(), f.arity);
        Subset image(A.size());
        for_tuples(v.mu_args(ys), [&](const Tuple& xs) {
          image.set(f.apply(xs));
          return true;
        });
        const auto target = fs.table[code];
        if (image != c.mu(target))
          return fail({A.format(image), v.aname(ys),
                       "f◇(μ(" + v.aname(ys) + ")) = " + A.format(image) + " ≠ μ(f♯(" + v.aname(ys) + ")) = μ(" +
                           B.name(target) + ") = " + A.format(c.mu(target))});
      }
      return {};
    }
    case PcgcProperty::backward_complete: {
      const auto& eta = c.eta_table();
      if (f.arity == 1) {
        const Sample sample = concrete_sample(c.carrier_order());
        for (const auto& x : sample.sets) {
          const auto lhs = lift_lub(l, eta, lift_diamond(f.table, A.size(), x));
          const auto ex = lift_lub(l, eta, x);
          if (lhs != fs(ex))
            return fail({A.format(x), B.name(ex),
                         "η∨(f◇(" + A.format(x) + ")) = " + B.name(lhs) + " ≠ f♯(η∨(" + A.format(x) + ")) = f♯(" +
                             B.name(ex) + ") = " + B.name(fs(ex))},
                        sample.exhaustive);
        }
        return {true, sample.exhaustive, std::nullopt};
      }
      Subset acc(B.size());
      std::optional<Witness> w;
      const bool exhaustive = for_pair_sample(A.size(), [&](const Subset& x, const Subset& y) {
        acc.reset();
        for_each_member(x, [&](std::size_t a1) { for_each_member(y, [&](std::size_t a2) { acc.set(eta[f(a1, a2)]); }); });
        const auto lhs = l.lub(acc);
        const auto ex = lift_lub(l, eta, x);
        const auto ey = lift_lub(l, eta, y);
        const auto rhs = fs(ex, ey);
        if (lhs == rhs) return true;
        w = Witness{"(" + A.format(x) + "," + A.format(y) + ")", "(" + B.name(ex) + "," + B.name(ey) + ")",
                    "η∨(f◇(" + A.format(x) + "," + A.format(y) + ")) = " + B.name(lhs) + " ≠ f♯(" + B.name(ex) + "," +
                        B.name(ey) + ") = " + B.name(rhs)};
        return false;
      });
      if (w) return fail(std::move(*w), exhaustive);
      return {true, exhaustive, std::nullopt};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> block_images(const GaloisConnection& g) {
  const auto n = g.carrier().size();
  Subset seen(g.abstract().size());
  for (std::size_t a = 0; a < n; ++a) seen.set(g.alpha(singleton(n, a)));
  return members(seen);
}

void require_pgc(const GaloisConnection& g) {
  if (auto r = check_gc(g); !r.is_gc) throw Error(ErrorKind::NotInClass, "not a GC: " + r.witness->detail);
  if (!g.over_powerset() || classify_partitioning(g).kind != Partitioning::pgc)
    throw Error(ErrorKind::NotInClass, "not a PGC");
}

}  // namespace

PropertyCheck is_block_preserving(const GaloisConnection& g, const AbstractFn& g_sharp) {
  require_pgc(g);
  const Lattice& d = g.abstract();
  if (g_sharp.arity != 1 || g_sharp.n != d.size())
    throw Error(ErrorKind::ShapeMismatch, "abstract function is not a unary function on the abstract lattice");
  const auto reps = block_images(g);
  const auto& A = g.carrier();
  for (auto a : A.search_order()) {
    const auto block = g.alpha(singleton(A.size(), a));
    const auto image = g_sharp(block);
    if (!std::binary_search(reps.begin(), reps.end(), image))
      return fail({A.name(a), d.name(block),
                   "g♯(α({" + A.name(a) + "})) = g♯(" + d.name(block) + ") = " + d.name(image) +
                       " is not α({a'}) for any a'"});
  }
  return {};
}

GcFnPair pair_to_pgc(const ConstructiveConnection& c, const FnPair& pair) {
  require_pair_shape(c, pair);
  if (pair.f.arity != 1) throw Error(ErrorKind::ShapeMismatch, "pair lifting is defined for unary functions");
  const auto nb = c.abstract().size();
  if (nb > kMaxPowersetBase) throw Error(ErrorKind::SizeGuard, "abstract carrier too large to lift to a powerset");
  IndexMap t(std::size_t{1} << nb);
  for (std::size_t mask = 0; mask < t.size(); ++mask) {
    std::size_t out = 0;
    for (std::size_t b = 0; b < nb; ++b)
      if (mask >> b & 1) out |= std::size_t{1} << pair.f_sharp(b);
    t[mask] = out;
  }
  return {lift(pair.f), FnTable{1, t.size(), std::move(t)}};
}

AbstractFn restrict_to_blocks(const GaloisConnection& g, const AbstractFn& g_sharp) {
  if (auto r = is_block_preserving(g, g_sharp); !r)
    throw Error(ErrorKind::NotBlockPreserving, r.witness->detail);
  const auto reps = block_images(g);
  IndexMap t(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    t[i] = static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), g_sharp(reps[i])) - reps.begin());
  return FnTable{1, reps.size(), std::move(t)};
}

FnPair pair_to_cgc(const GaloisConnection& g, const ConcreteFn& f, const AbstractFn& g_sharp) {
  const auto report = check_gc(g);
  if (!report.is_gi) throw Error(ErrorKind::NotGI, "the connection is not a Galois insertion");
  require_pgc(g);
  if (f.arity != 1 || f.n != g.carrier().size())
    throw Error(ErrorKind::ShapeMismatch, "concrete function is not a unary function on the carrier");
  if (auto s = gc_pair_property(g, {lift(f), g_sharp}, GcProperty::sound); !s)
    throw Error(ErrorKind::NotSound, s.witness->detail);
  AbstractFn restricted = restrict_to_blocks(g, g_sharp);
  const auto reps = block_images(g);
  const auto n = g.carrier().size();
  for (std::size_t a = 0; a < n; ++a) {
    const auto block = g.alpha(singleton(n, a));
    const auto pos = static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), block) - reps.begin());
    if (reps[restricted(pos)] != g.alpha(singleton(n, f(a))))
      throw Error(ErrorKind::InvariantViolated, "g♯(α({" + g.carrier().name(a) + "})) differs from α({g(" +
                                                    g.carrier().name(a) + ")})");
  }
  return {f, std::move(restricted)};
}

bool pair_iso(const ConstructiveConnection& c1, const FnPair& p1, const ConstructiveConnection& c2,
              const FnPair& p2) {
  if (!(c1.carrier() == c2.carrier())) throw Error(ErrorKind::ShapeMismatch, "connections are over different carriers");
  if (p1.f.arity != p2.f.arity) throw Error(ErrorKind::ShapeMismatch, "pairs have different arities");
  if (auto s = cgc_soundness(c1, p1, Variant::eta_eta); !s) throw Error(ErrorKind::NotSound, s.witness->detail);
  if (auto s = cgc_soundness(c2, p2, Variant::eta_eta); !s) throw Error(ErrorKind::NotSound, s.witness->detail);
  const CgcView v{c1, p1};
  return for_tuples(v.concrete_args(), [&](const Tuple& xs) {
    return c1.mu(p1.f_sharp.apply(map_tuple(c1.eta_table(), xs))) ==
           c2.mu(p2.f_sharp.apply(map_tuple(c2.eta_table(), xs)));
  });
}

}  // namespace pcgc
