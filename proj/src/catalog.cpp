#include "pcgc/catalog.hpp"

#include "pcgc/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace pcgc {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

Provenance builtin_tag(const char* name) { return {"builtin", name}; }

void require_bound(std::int64_t n, std::int64_t min, const char* name) {
  if (n < min)
    throw Error(ErrorKind::BoundTooSmall, std::string(name) + " needs a bound of at least " + std::to_string(min) +
                                              ", got " + std::to_string(n));
}

// The sign lattice, optionally without ≠0.
struct SignShape {
  std::vector<std::string> names;
  Edges edges;
};

SignShape sign_shape(bool with_neq) {
  SignShape s;
  s.names = {"∅", "<0", "=0", ">0", "≤0"};
  if (with_neq) s.names.push_back("≠0");
  s.names.push_back("≥0");
  s.names.push_back("ℤ");
  s.edges = {{"∅", "<0"}, {"∅", "=0"}, {"∅", ">0"}, {"<0", "≤0"}, {"=0", "≤0"},
             {">0", "≥0"}, {"=0", "≥0"}, {"≤0", "ℤ"}, {"≥0", "ℤ"}};
  if (with_neq) {
    s.edges.push_back({"<0", "≠0"});
    s.edges.push_back({">0", "≠0"});
    s.edges.push_back({"≠0", "ℤ"});
  }
  return s;
}

Subset sign_gamma(const Carrier& A, std::string_view name) {
  if (name == "∅") return A.empty();
  if (name == "<0") return A.where([](auto v) { return v < 0; });
  if (name == "=0") return A.where([](auto v) { return v == 0; });
  if (name == ">0") return A.where([](auto v) { return v > 0; });
  if (name == "≤0") return A.where([](auto v) { return v <= 0; });
  if (name == "≠0") return A.where([](auto v) { return v != 0; });
  if (name == "≥0") return A.where([](auto v) { return v >= 0; });
  return A.all();
}

std::string sign_of(std::int64_t v) { return v < 0 ? "<0" : v == 0 ? "=0" : ">0"; }

GaloisConnection sign_gc(std::int64_t bound, bool with_neq, Kind kind, const char* tag) {
  require_bound(bound, 1, tag);
  const Carrier A = Carrier::saturating(bound);
  const auto shape = sign_shape(with_neq);
  Lattice d = Lattice::from_poset(build_poset(shape.names, shape.edges));
  IndexMap alpha(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) alpha[a] = d.index(sign_of(A.value(a)));
  SetMap gamma;
  for (const auto& n : shape.names) gamma.push_back(sign_gamma(A, n));
  return GaloisConnection::from_atoms(A, Poset::discrete(A.names()), std::move(d), std::move(alpha),
                                      std::move(gamma), kind, builtin_tag(tag));
}

// Interval [lo, hi] of the carrier, with open ends written as nullopt.
Subset interval(const Carrier& A, std::optional<std::int64_t> lo, std::optional<std::int64_t> hi) {
  return A.where([&](auto v) { return (!lo || v >= *lo) && (!hi || v <= *hi); });
}

ConstructiveConnection make_cc(Kind kind, const Carrier& A, const std::vector<std::string>& names, const Edges& edges,
                               const std::function<std::string(std::int64_t)>& eta_name,
                               const std::function<Subset(const std::string&)>& mu_of, const char* tag) {
  Poset B = build_poset(names, edges);
  IndexMap eta(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) eta[a] = B.index(eta_name(A.value(a)));
  SetMap mu;
  for (const auto& n : names) mu.push_back(mu_of(n));
  return ConstructiveConnection(kind, A, std::move(B), std::move(eta), std::move(mu), std::nullopt, builtin_tag(tag));
}

}  // namespace

ConstructiveConnection parity(std::int64_t bound) {
  require_bound(bound, 1, "parity");
  const Carrier A = Carrier::modular(bound);
  return make_cc(
      Kind::cgc, A, {"even", "odd"}, {}, [](std::int64_t v) { return v % 2 == 0 ? "even" : "odd"; },
      [&](const std::string& n) {
        const bool even = n == "even";
        return A.where([&](auto v) { return (v % 2 == 0) == even; });
      },
      "parity");
}

ConstructiveConnection sign_cgc(std::int64_t bound) {
  require_bound(bound, 1, "sign_cgc");
  const Carrier A = Carrier::saturating(bound);
  return make_cc(
      Kind::cgc, A, {"-", "0", "+", "⊥"}, {},
      [](std::int64_t v) { return v < 0 ? "-" : v == 0 ? "0" : "+"; },
      [&](const std::string& n) {
        if (n == "-") return sign_gamma(A, "<0");
        if (n == "0") return sign_gamma(A, "=0");
        if (n == "+") return sign_gamma(A, ">0");
        return A.empty();
      },
      "sign_cgc");
}

ConstructiveConnection plustop_cgp(std::int64_t bound) {
  require_bound(bound, 1, "plustop_cgp");
  const Carrier A = Carrier::saturating(bound);
  return make_cc(
      Kind::cgp, A, {"+", "⊤"}, {{"+", "⊤"}}, [](std::int64_t v) { return v > 0 ? "+" : "⊤"; },
      [&](const std::string& n) { return n == "+" ? sign_gamma(A, ">0") : A.all(); }, "plustop_cgp");
}

GaloisConnection sign_pgi(std::int64_t bound) { return sign_gc(bound, true, Kind::pgc, "sign_pgi"); }

GaloisConnection sign_minus_ppgc(std::int64_t bound) {
  return sign_gc(bound, false, Kind::ppgc, "sign_minus_ppgc");
}

GaloisConnection interval_gi_d(std::int64_t bound) {
  require_bound(bound, 10, "interval_gi_d");
  const Carrier A = Carrier::saturating(bound);
  const std::vector<std::string> names{"∅", "[-5,-1]", "[1,5]", "[-7,7]", "[-9,+∞)", "ℤ"};
  Lattice d = Lattice::from_poset(build_poset(
      names, {{"∅", "[-5,-1]"}, {"∅", "[1,5]"}, {"[-5,-1]", "[-7,7]"}, {"[1,5]", "[-7,7]"}, {"[-7,7]", "[-9,+∞)"},
              {"[-9,+∞)", "ℤ"}}));
  const SetMap gamma{A.empty(), interval(A, -5, -1), interval(A, 1, 5), interval(A, -7, 7),
                     interval(A, -9, std::nullopt), A.all()};
  IndexMap alpha(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) {
    // Least member containing a: scan upward along a linear extension.
    for (auto v : d.poset().linear_extension())
      if (gamma[v].test(a)) {
        alpha[a] = v;
        break;
      }
  }
  return GaloisConnection::from_atoms(A, Poset::discrete(A.names()), std::move(d), std::move(alpha), gamma, Kind::gc,
                                      builtin_tag("interval_gi_d"));
}

namespace {

std::string interval_block(std::int64_t v) {
  if (v <= -10) return "(-∞,-10]";
  if (v <= -1) return "[-9,-1]";
  if (v == 0) return "[0,0]";
  if (v <= 9) return "[1,9]";
  return "[10,+∞)";
}

Subset interval_set(const Carrier& A, const std::string& n) {
  if (n == "∅") return A.empty();
  if (n == "(-∞,-10]") return interval(A, std::nullopt, -10);
  if (n == "[-9,-1]") return interval(A, -9, -1);
  if (n == "[0,0]") return interval(A, 0, 0);
  if (n == "[1,9]") return interval(A, 1, 9);
  if (n == "[10,+∞)") return interval(A, 10, std::nullopt);
  if (n == "[-9,9]") return interval(A, -9, 9);
  if (n == "(-∞,9]") return interval(A, std::nullopt, 9);
  if (n == "[-9,+∞)") return interval(A, -9, std::nullopt);
  if (n == "[-10,10]") return interval(A, -10, 10);
  return A.all();
}

}  // namespace

ConstructiveConnection interval_pcgc(std::int64_t bound) {
  require_bound(bound, 10, "interval_pcgc");
  const Carrier A = Carrier::saturating(bound);
  const std::vector<std::string> names{"∅",      "(-∞,-10]", "[-9,-1]", "[0,0]",   "[1,9]",
                                       "[10,+∞)", "[-9,9]",   "(-∞,9]",  "[-9,+∞)", "ℤ"};
  const Edges edges{{"∅", "(-∞,-10]"},     {"∅", "[-9,-1]"},      {"∅", "[0,0]"},         {"∅", "[1,9]"},
                    {"∅", "[10,+∞)"},      {"[-9,-1]", "[-9,9]"}, {"[0,0]", "[-9,9]"},    {"[1,9]", "[-9,9]"},
                    {"[-9,9]", "(-∞,9]"},  {"[-9,9]", "[-9,+∞)"}, {"(-∞,-10]", "(-∞,9]"}, {"[10,+∞)", "[-9,+∞)"},
                    {"(-∞,9]", "ℤ"},       {"[-9,+∞)", "ℤ"}};
  return make_cc(Kind::pcgc, A, names, edges, interval_block,
                 [&](const std::string& n) { return interval_set(A, n); }, "interval_pcgc");
}

ConstructiveConnection interval_bprime(std::int64_t bound) {
  require_bound(bound, 10, "interval_bprime");
  const Carrier A = Carrier::saturating(bound);
  const std::vector<std::string> names{"∅", "(-∞,-10]", "[-9,-1]", "[0,0]", "[1,9]", "[10,+∞)", "[-10,10]", "ℤ"};
  const Edges edges{{"∅", "(-∞,-10]"},    {"∅", "[-9,-1]"},        {"∅", "[0,0]"},     {"∅", "[1,9]"},
                    {"∅", "[10,+∞)"},     {"[-9,-1]", "[-10,10]"}, {"[0,0]", "[-10,10]"}, {"[1,9]", "[-10,10]"},
                    {"[-10,10]", "ℤ"},    {"(-∞,-10]", "ℤ"},       {"[10,+∞)", "ℤ"}};
  return make_cc(Kind::pcgc, A, names, edges, interval_block,
                 [&](const std::string& n) { return interval_set(A, n); }, "interval_bprime");
}

ConstructiveConnection signconst_pcgc(std::int64_t bound) {
  require_bound(bound, 2, "signconst_pcgc");
  const Carrier A = Carrier::saturating(bound);
  std::vector<std::string> names{"∅"};
  Edges edges;
  for (std::int64_t v = -bound; v <= bound; ++v) {
    const auto c = std::to_string(v);
    names.push_back(c);
    edges.push_back({"∅", c});
    if (v > 0) edges.push_back({c, ">0"});
    if (v < 0) edges.push_back({c, "<0"});
    if (v == 0) {
      edges.push_back({c, "≤0"});
      edges.push_back({c, "≥0"});
    }
  }
  for (const char* n : {">0", "<0", "≥0", "≤0", "≠0", "ℤ"}) names.push_back(n);
  for (const auto& e : Edges{{"<0", "≤0"}, {"<0", "≠0"}, {">0", "≥0"}, {">0", "≠0"}, {"≤0", "ℤ"}, {"≠0", "ℤ"},
                             {"≥0", "ℤ"}})
    edges.push_back(e);
  return make_cc(
      Kind::pcgc, A, names, edges, [](std::int64_t v) { return std::to_string(v); },
      [&](const std::string& n) {
        if (n == "∅" || n == "<0" || n == ">0" || n == "≤0" || n == "≥0" || n == "≠0" || n == "ℤ")
          return sign_gamma(A, n);
        return singleton(A.size(), A.index(n));
      },
      "signconst_pcgc");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"parity",          "sign_cgc",      "plustop_cgp",
                                              "sign_pgi",        "sign_minus_ppgc", "interval_gi_d",
                                              "interval_pcgc",   "interval_bprime", "signconst_pcgc"};
  return names;
}

Domain builtin(std::string_view name, std::int64_t bound) {
  if (name == "parity") return parity(bound);
  if (name == "sign_cgc") return sign_cgc(bound);
  if (name == "plustop_cgp") return plustop_cgp(bound);
  if (name == "sign_pgi") return sign_pgi(bound);
  if (name == "sign_minus_ppgc") return sign_minus_ppgc(bound);
  if (name == "interval_gi_d") return interval_gi_d(bound);
  if (name == "interval_pcgc") return interval_pcgc(bound);
  if (name == "interval_bprime") return interval_bprime(bound);
  if (name == "signconst_pcgc") return signconst_pcgc(bound);
  throw Error(ErrorKind::UnknownName, "no builtin domain named '" + std::string(name) + "'");
}

ConcreteFn concrete_op(std::string_view name, const Carrier& carrier) {
  using I = std::int64_t;
  if (name == "id") return int_unary(carrier, [](I v) { return v; });
  if (name == "succ") return int_unary(carrier, [](I v) { return v + 1; });
  if (name == "pred") return int_unary(carrier, [](I v) { return v - 1; });
  if (name == "neg") return int_unary(carrier, [](I v) { return -v; });
  if (name == "sq") return int_unary(carrier, [](I v) { return v * v; });
  if (name == "add") return int_binary(carrier, [](I a, I b) { return a + b; });
  if (name == "sub") return int_binary(carrier, [](I a, I b) { return a - b; });
  if (name == "mul") return int_binary(carrier, [](I a, I b) { return a * b; });
  throw Error(ErrorKind::UnknownName, "no concrete operation named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

namespace {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t salt) { return Rng(seed * 0x9E3779B97F4A7C15ULL + salt); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

void guard(const GenParams& p) {
  if (p.amax < 1 || p.amax > 10) throw Error(ErrorKind::SizeGuard, "generated carriers hold 1 to 10 values");
  if (p.bmax < 1 || p.bmax > 12) throw Error(ErrorKind::SizeGuard, "generated abstract domains hold 1 to 12 values");
}

Carrier atom_carrier(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return Carrier::atoms(std::move(names));
}

// Block id per element, every one of the k blocks nonempty.
std::vector<std::size_t> random_partition(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[perm[i]] = i < k ? i : pick(rng, 0, k - 1);
  return block;
}

// CGC over `A` whose partition is `block` (k blocks), plus `junk` empty values,
// declared in shuffled order.
ConstructiveConnection cgc_from_partition(Rng& rng, const Carrier& A, const std::vector<std::size_t>& block,
                                          std::size_t k, std::size_t junk, const char* tag) {
  std::vector<std::size_t> labels(k + junk);
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<std::string> names;
  std::vector<std::size_t> position(k + junk);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    position[labels[i]] = i;
    names.push_back(labels[i] < k ? "b" + std::to_string(labels[i]) : "j" + std::to_string(labels[i] - k));
  }
  IndexMap eta(A.size());
  SetMap mu(k + junk, A.empty());
  for (std::size_t a = 0; a < A.size(); ++a) {
    eta[a] = position[block[a]];
    mu[eta[a]].set(a);
  }
  return ConstructiveConnection(Kind::cgc, A, Poset::discrete(std::move(names)), std::move(eta), std::move(mu),
                                std::nullopt, {"generator", tag});
}

ConstructiveConnection cgc_over(Rng& rng, const Carrier& A, std::size_t bmax) {
  const std::size_t k = pick(rng, 1, std::min(A.size(), bmax));
  const std::size_t junk = pick(rng, 0, std::min<std::size_t>(2, bmax - k));
  return cgc_from_partition(rng, A, random_partition(rng, A.size(), k), k, junk, "gen_cgc");
}

// Close a family of sets under pairwise intersection.
void close_under_meets(std::vector<Subset>& family) {
  std::set<Subset> seen(family.begin(), family.end());
  bool changed = true;
  while (changed) {
    changed = false;
    const auto current = family;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        Subset m = current[i] & current[j];
        if (seen.insert(m).second) {
          family.push_back(std::move(m));
          changed = true;
        }
      }
  }
  std::sort(family.begin(), family.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members(a) < members(b);
  });
}

}  // namespace

ConstructiveConnection gen_cgc(std::uint64_t seed, GenParams params) {
  guard(params);
  Rng rng = make_rng(seed, 1);
  return cgc_over(rng, atom_carrier(pick(rng, 1, params.amax)), params.bmax);
}

ConstructiveConnection gen_cgc_over(std::uint64_t seed, const Carrier& carrier, std::size_t bmax) {
  guard({std::min<std::size_t>(carrier.size(), 10), bmax});
  Rng rng = make_rng(seed, 2);
  return cgc_over(rng, carrier, bmax);
}

std::pair<ConstructiveConnection, ConstructiveConnection> gen_cgc_pair(std::uint64_t seed, GenParams params) {
  guard(params);
  Rng rng = make_rng(seed, 3);
  const Carrier A = atom_carrier(pick(rng, 1, params.amax));
  auto first = cgc_over(rng, A, params.bmax);
  if (!coin(rng, 0.5)) return {first, cgc_over(rng, A, params.bmax)};
  // Coarsen: merge the first partition's blocks into random groups.
  const auto image = members(first.eta_image());
  const std::size_t groups = pick(rng, 1, image.size());
  std::vector<std::size_t> group_of = random_partition(rng, image.size(), groups);
  std::vector<std::size_t> block(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) {
    const auto pos = std::lower_bound(image.begin(), image.end(), first.eta(a)) - image.begin();
    block[a] = group_of[static_cast<std::size_t>(pos)];
  }
  const std::size_t junk = pick(rng, 0, std::min<std::size_t>(2, params.bmax - std::min(params.bmax, groups)));
  auto second = cgc_from_partition(rng, A, block, groups, junk, "gen_cgc_pair");
  if (coin(rng, 0.5)) return {first, second};
  return {second, first};
}

GaloisConnection gen_pgc(std::uint64_t seed, GenParams params) {
  guard(params);
  Rng rng = make_rng(seed, 4);
  const Carrier A = atom_carrier(pick(rng, 1, params.amax));
  const std::size_t k = pick(rng, 1, std::min(A.size(), params.bmax));
  return t_pgc(cgc_from_partition(rng, A, random_partition(rng, A.size(), k), k, 0, "gen_pgc"));
}

GaloisConnection gen_ppgc(std::uint64_t seed, GenParams params) {
  guard(params);
  Rng rng = make_rng(seed, 5);
  const Carrier A = atom_carrier(pick(rng, 1, params.amax));
  const std::size_t k = pick(rng, 1, std::min(A.size(), params.bmax));
  const auto block = random_partition(rng, A.size(), k);
  std::vector<Subset> blocks(k, A.empty());
  for (std::size_t a = 0; a < A.size(); ++a) blocks[block[a]].set(a);

  std::vector<Subset> family = blocks;
  if (k > 1) family.push_back(A.all());
  const std::size_t extra = pick(rng, 0, 3);
  for (std::size_t i = 0; i < extra; ++i) {
    Subset u = A.empty();
    for (const auto& b : blocks)
      if (coin(rng, 0.5)) u |= b;
    if (std::find(family.begin(), family.end(), u) == family.end()) family.push_back(std::move(u));
  }
  close_under_meets(family);
  std::vector<std::string> names;
  for (const auto& s : family) names.push_back(A.format(s));
  SetLattice lattice(names, family);
  IndexMap alpha(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) alpha[a] = lattice.element_of(blocks[block[a]]);
  return GaloisConnection::from_atoms(A, Poset::discrete(A.names()), lattice.lattice(), std::move(alpha), family,
                                      Kind::ppgc, {"generator", "gen_ppgc"});
}

ConstructiveConnection gen_pcgc(std::uint64_t seed, GenParams params) { return t_pcgc(gen_ppgc(seed, params)); }

GaloisConnection gen_gc(std::uint64_t seed, GenParams params) {
  guard(params);
  Rng rng = make_rng(seed, 6);
  const std::size_t n = pick(rng, 1, std::min<std::size_t>(params.amax, 6));
  const Carrier A = atom_carrier(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, 0.3)) edges.emplace_back(perm[i], perm[j]);
  Poset order = build_poset_indexed(A.names(), edges);

  std::vector<Subset> family{A.all()};
  for (const auto& d : enumerate_downsets(order))
    if (d != A.all() && coin(rng, 0.4)) family.push_back(d);
  close_under_meets(family);
  std::vector<std::string> names;
  for (const auto& s : family) names.push_back(A.format(s));
  SetLattice lattice(names, family);

  std::unordered_map<Subset, std::size_t, SubsetHash> alpha;
  for (const auto& x : enumerate_downsets(order)) alpha.emplace(x, lattice.closure_of(x));
  return GaloisConnection::from_table(A, std::move(order), lattice.lattice(), std::move(alpha), family, Kind::gc,
                                      {"generator", "gen_gc"});
}

ConstructiveConnection gen_cgp(std::uint64_t seed, GenParams params) { return t_cgp(gen_gc(seed, params)); }

FnPair gen_sound_pair(std::uint64_t seed, const ConstructiveConnection& c) {
  Rng rng = make_rng(seed, 7);
  const auto& A = c.carrier();
  const auto nb = c.abstract().size();
  const auto image = members(c.eta_image());
  IndexMap target(nb);
  for (std::size_t y = 0; y < nb; ++y) target[y] = image[pick(rng, 0, image.size() - 1)];
  IndexMap f(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) {
    const auto choices = members(c.mu(target[c.eta(a)]));
    f[a] = choices[pick(rng, 0, choices.size() - 1)];
  }
  IndexMap fs(nb);
  for (std::size_t y = 0; y < nb; ++y) fs[y] = c.eta_image().test(y) ? target[y] : pick(rng, 0, nb - 1);
  return {FnTable{1, A.size(), std::move(f)}, FnTable{1, nb, std::move(fs)}};
}

PairInstance gen_cgc_pair_instance(std::uint64_t seed, GenParams params) {
  auto c = gen_cgc(seed, params);
  auto pair = gen_sound_pair(seed, c);
  Rng rng = make_rng(seed, 8);
  switch (pick(rng, 0, 5)) {
    case 0: pair.f.table[pick(rng, 0, pair.f.n - 1)] = pick(rng, 0, pair.f.n - 1); break;
    case 1: pair.f_sharp.table[pick(rng, 0, pair.f_sharp.n - 1)] = pick(rng, 0, pair.f_sharp.n - 1); break;
    default: break;
  }
  return {std::move(c), std::move(pair)};
}

PairInstance gen_pcgc_pair_instance(std::uint64_t seed, int arity, GenParams params) {
  auto c = gen_pcgc(seed, params);
  Rng rng = make_rng(seed, 9);
  const auto n = c.carrier().size();
  const auto nb = c.abstract().size();
  IndexMap f(arity == 1 ? n : n * n);
  for (auto& v : f) v = pick(rng, 0, n - 1);
  FnPair pair{FnTable::make(arity, n, std::move(f)), {}};
  pair.f_sharp = bca_pcgc(c, pair.f);
  const Lattice& l = c.require_lattice();
  auto& t = pair.f_sharp.table;
  switch (pick(rng, 0, 2)) {
    case 1:
      for (auto& v : t)
        if (coin(rng, 0.3)) v = l.join(v, pick(rng, 0, nb - 1));
      break;
    case 2: t[pick(rng, 0, t.size() - 1)] = pick(rng, 0, nb - 1); break;
    default: break;
  }
  return {std::move(c), std::move(pair)};
}

}  // namespace pcgc
