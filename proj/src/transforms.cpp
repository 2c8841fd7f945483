#include "pcgc/transforms.hpp"

#include <algorithm>

namespace pcgc {

namespace {

Provenance from(Kind source, const char* transform) { return {std::string(to_string(source)), transform}; }

void require_cgc(const ConstructiveConnection& c) {
  if (auto chk = check_cgc(c); !chk) throw Error(ErrorKind::NotInClass, "not a CGC: " + chk.witness->detail);
}

void require_gc(const GaloisConnection& g) {
  if (auto r = check_gc(g); !r.is_gc) throw Error(ErrorKind::NotInClass, "not a GC: " + r.witness->detail);
}

Partitioning require_partitioning(const GaloisConnection& g, bool additive_required) {
  require_gc(g);
  if (!g.over_powerset()) throw Error(ErrorKind::NotInClass, "concrete domain is not a powerset");
  auto r = classify_partitioning(g);
  if (r.kind == Partitioning::neither)
    throw Error(ErrorKind::NotInClass, "prt(G) is not a partition of the carrier");
  if (additive_required && r.kind != Partitioning::pgc)
    throw Error(ErrorKind::NotInClass, "γ is not additive, so the connection is not a PGC");
  return r.kind;
}

void ensure_gc(const GaloisConnection& g, const char* transform) {
  if (auto r = check_gc(g); !r.is_gc)
    throw Error(ErrorKind::InvariantViolated,
                std::string(transform) + " produced a non-GC: " + r.witness->detail);
}

void ensure(bool ok, const char* transform, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvariantViolated, std::string(transform) + " output " + what);
}

}  // namespace

GaloisConnection t_pgc(const ConstructiveConnection& c) {
  require_cgc(c);
  const auto& B = c.abstract();
  if (B.size() > kMaxPowersetBase)
    throw Error(ErrorKind::SizeGuard, "℘(B) with |B| = " + std::to_string(B.size()) + " exceeds the limit of " +
                                          std::to_string(kMaxPowersetBase));
  const SetLattice pb = powerset_lattice(B.elements());
  const auto n = c.carrier().size();
  IndexMap alpha(n);
  for (std::size_t a = 0; a < n; ++a) alpha[a] = std::size_t{1} << c.eta(a);
  SetMap gamma(pb.size());
  for (std::size_t mask = 0; mask < pb.size(); ++mask) gamma[mask] = lift_star(c.mu_table(), n, pb.set(mask));
  auto g = GaloisConnection::from_atoms(c.carrier(), Poset::discrete(c.carrier().names()), pb.lattice(),
                                        std::move(alpha), std::move(gamma), Kind::pgc, from(c.kind(), "t_pgc"));
  ensure_gc(g, "t_pgc");
  ensure(classify_partitioning(g).kind == Partitioning::pgc, "t_pgc", "is not a PGC");
  return g;
}

namespace {

// Abstract values reached by singletons, in abstract declaration order.
std::vector<std::size_t> singleton_images(const GaloisConnection& g) {
  const auto n = g.carrier().size();
  Subset seen(g.abstract().size());
  for (std::size_t a = 0; a < n; ++a) seen.set(g.alpha(singleton(n, a)));
  return members(seen);
}

}  // namespace

ConstructiveConnection t_cgc_of_pgc(const GaloisConnection& g) {
  require_partitioning(g, true);
  const auto reps = singleton_images(g);
  const auto n = g.carrier().size();
  std::vector<std::string> names;
  SetMap mu;
  for (auto d : reps) {
    names.push_back(g.abstract().name(d));
    mu.push_back(g.gamma(d));
  }
  IndexMap eta(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto d = g.alpha(singleton(n, a));
    eta[a] = static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), d) - reps.begin());
  }
  ConstructiveConnection out(Kind::cgc, g.carrier(), Poset::discrete(std::move(names)), std::move(eta),
                             std::move(mu), std::nullopt, from(g.kind(), "t_cgc"));
  ensure(bool(check_cgc(out)), "t_cgc", "fails the CGC checker");
  return out;
}

ClosureOp t_cco(const ConstructiveConnection& c) {
  require_cgc(c);
  SetMap phi(c.carrier().size());
  for (std::size_t a = 0; a < phi.size(); ++a) phi[a] = c.mu(c.eta(a));
  ClosureOp out(c.carrier(), std::move(phi), from(c.kind(), "t_cco"));
  ensure(bool(check_cco(out)), "t_cco", "fails the CCO checker");
  return out;
}

ConstructiveConnection t_cgc_of_cco(const ClosureOp& op) {
  if (auto chk = check_cco(op); !chk) throw Error(ErrorKind::NotInClass, "not a CCO: " + chk.witness->detail);
  const auto& A = op.carrier();
  std::vector<Subset> blocks;
  for (std::size_t a = 0; a < A.size(); ++a)
    if (std::find(blocks.begin(), blocks.end(), op.phi(a)) == blocks.end()) blocks.push_back(op.phi(a));
  // Blocks are disjoint and nonempty, so ordering by least member is total.
  std::sort(blocks.begin(), blocks.end(),
            [](const Subset& x, const Subset& y) { return x.find_first() < y.find_first(); });
  std::vector<std::string> names;
  for (const auto& b : blocks) names.push_back("[" + A.name(b.find_first()) + "]");
  IndexMap eta(A.size());
  for (std::size_t a = 0; a < A.size(); ++a)
    eta[a] = static_cast<std::size_t>(std::find(blocks.begin(), blocks.end(), op.phi(a)) - blocks.begin());
  ConstructiveConnection out(Kind::cgc, A, Poset::discrete(std::move(names)), std::move(eta), std::move(blocks),
                             std::nullopt, {"cco", "t_cgc"});
  ensure(bool(check_cgc(out)), "t_cgc", "fails the CGC checker");
  return out;
}

GaloisConnection t_gc(const ConstructiveConnection& c) {
  const Lattice& B = c.require_lattice();
  if (auto chk = check_cgp(c); !chk) throw Error(ErrorKind::NotInClass, "not a CGP: " + chk.witness->detail);
  const auto& order = c.carrier_order();
  IndexMap alpha(c.carrier().size());
  for (std::size_t a = 0; a < alpha.size(); ++a) alpha[a] = lift_lub(B, c.eta_table(), order.down(a));
  auto g = GaloisConnection::from_atoms(c.carrier(), order, B, std::move(alpha), c.mu_table(), Kind::gc,
                                        from(c.kind(), "t_gc"));
  ensure_gc(g, "t_gc");
  return g;
}

ConstructiveConnection t_cgp(const GaloisConnection& g) {
  require_gc(g);
  IndexMap eta(g.carrier().size());
  for (std::size_t a = 0; a < eta.size(); ++a) eta[a] = g.alpha_principal(a);
  ConstructiveConnection out(Kind::cgp, g.carrier(), g.abstract().poset(), std::move(eta), g.gamma_table(),
                             g.carrier_order(), from(g.kind(), "t_cgp"));
  if (auto chk = check_cgp(out); !chk)
    throw Error(ErrorKind::InvariantViolated, "t_cgp output fails the CGP checker: " + chk.witness->detail);
  return out;
}

GaloisConnection t_ppgc(const ConstructiveConnection& c) {
  const Lattice& B = c.require_lattice();
  if (!c.carrier_order().is_discrete()) throw Error(ErrorKind::NotInClass, "a PCGC has a discrete carrier");
  if (auto r = check_pcgc(c); !r.ok()) {
    const auto& w = r.witness1 ? r.witness1 : r.witness2;
    throw Error(ErrorKind::NotInClass, "not a PCGC" + (w ? ": " + w->detail : std::string()));
  }
  auto g = GaloisConnection::from_atoms(c.carrier(), c.carrier_order(), B, c.eta_table(), c.mu_table(), Kind::ppgc,
                                        from(c.kind(), "t_ppgc"));
  ensure_gc(g, "t_ppgc");
  ensure(classify_partitioning(g).kind != Partitioning::neither, "t_ppgc", "is not partitioning");
  return g;
}

ConstructiveConnection t_pcgc(const GaloisConnection& g) {
  require_partitioning(g, false);
  const auto n = g.carrier().size();
  IndexMap eta(n);
  for (std::size_t a = 0; a < n; ++a) eta[a] = g.alpha(singleton(n, a));
  ConstructiveConnection out(Kind::pcgc, g.carrier(), g.abstract().poset(), std::move(eta), g.gamma_table(),
                             std::nullopt, from(g.kind(), "t_pcgc"));
  ensure(check_pcgc(out).ok(), "t_pcgc", "fails the PCGC checker");
  return out;
}

Subset least_disjunctive_basis(const GaloisConnection& g) {
  require_partitioning(g, true);
  const Lattice& d = g.abstract();
  const Subset ji = join_irreducibles(d);
  // Every finite lattice embeds into ℘(JI) via x ↦ JI ∩ ↓x; it is Boolean
  // exactly when that embedding is onto.
  if (ji.count() >= 8 * sizeof(std::size_t) || d.size() != std::size_t{1} << ji.count())
    throw Error(ErrorKind::NotInClass, "abstract lattice is not a powerset");
  return meet_closure(d, ji);
}

GaloisConnection disjunctive_completion(const GaloisConnection& g) {
  require_partitioning(g, false);
  const auto blocks = prt(g);
  const std::size_t k = blocks.size();
  if (k > 16) throw Error(ErrorKind::SizeGuard, "too many blocks for an explicit disjunctive completion");
  const auto& A = g.carrier();
  const Lattice& d = g.abstract();

  std::vector<std::string> block_names;
  for (const auto& b : blocks) block_names.push_back(d.name(g.alpha(singleton(A.size(), b.find_first()))));

  std::vector<Subset> sets;
  std::vector<std::string> names;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Subset u = A.empty();
    std::string joined;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        u |= blocks[i];
        joined += (joined.empty() ? "" : "∨") + block_names[i];
      }
    std::optional<std::string> existing;
    for (std::size_t v = 0; v < d.size() && !existing; ++v)
      if (g.gamma(v) == u) existing = d.name(v);
    names.push_back(existing ? *existing : joined.empty() ? std::string("⊥") : joined);
    sets.push_back(std::move(u));
  }
  // Keep names unique even if a synthesized one collides with an existing one.
  for (std::size_t i = 0; i < names.size(); ++i)
    while (std::count(names.begin(), names.end(), names[i]) > 1) names[i] += "'";

  IndexMap alpha(A.size());
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t i = 0; i < k; ++i)
      if (blocks[i].test(a)) alpha[a] = std::size_t{1} << i;
  const SetLattice family = SetLattice::trusted(std::move(names), sets);
  auto out = GaloisConnection::from_atoms(A, g.carrier_order(), family.lattice(), std::move(alpha), std::move(sets),
                                          Kind::pgc, from(g.kind(), "disjunctive_completion"));
  ensure_gc(out, "disjunctive_completion");
  ensure(classify_partitioning(out).kind == Partitioning::pgc, "disjunctive_completion", "is not a PGC");
  return out;
}

}  // namespace pcgc
