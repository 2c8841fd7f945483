#include <doctest.h>

#include "oracle.hpp"

#include "pcgc/transforms.hpp"

#include <random>

using namespace pcgc;

namespace {

using AlphaTable = std::unordered_map<Subset, std::size_t, SubsetHash>;

AlphaTable alpha_table_of(const GaloisConnection& g) {
  AlphaTable t;
  for (const auto& x : g.concrete_elements()) t.emplace(x, g.alpha(x));
  return t;
}

// Moves one α entry or toggles one γ bit. The result may or may not be a GC.
GaloisConnection perturb(const GaloisConnection& g, std::mt19937_64& rng) {
  auto alpha = alpha_table_of(g);
  auto gamma = g.gamma_table();
  if (rng() % 2) {
    auto it = std::next(alpha.begin(), static_cast<long>(rng() % alpha.size()));
    it->second = rng() % g.abstract().size();
  } else {
    auto& s = gamma[rng() % gamma.size()];
    s.flip(rng() % s.size());
  }
  return GaloisConnection::from_table(g.carrier(), g.carrier_order(), g.abstract(), std::move(alpha),
                                      std::move(gamma));
}

ConstructiveConnection perturb(const ConstructiveConnection& c, std::mt19937_64& rng) {
  auto eta = c.eta_table();
  auto mu = c.mu_table();
  if (rng() % 2) {
    eta[rng() % eta.size()] = rng() % c.abstract().size();
  } else {
    auto& s = mu[rng() % mu.size()];
    s.flip(rng() % s.size());
  }
  return ConstructiveConnection(c.kind(), c.carrier(), c.abstract(), std::move(eta), std::move(mu),
                                c.carrier_order());
}

// α∘γ = id.
bool is_gi(const GaloisConnection& g) {
  for (std::size_t d = 0; d < g.abstract().size(); ++d)
    if (g.alpha(g.gamma(d)) != d) return false;
  return true;
}

}  // namespace

TEST_CASE("check_gc agrees with the adjunction oracle") {
  std::mt19937_64 rng(21);
  int yes = 0, no = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const GenParams params{5, 6};
    for (const auto& g : {gen_gc(seed, params), gen_pgc(seed, params), gen_ppgc(seed, params)}) {
      const auto r = check_gc(g);
      CHECK(r.is_gc);
      CHECK(oracle::gc(g));
      CHECK(r.is_gi == is_gi(g));
      const auto bad = perturb(g, rng);
      const bool want = oracle::gc(bad);
      const auto rb = check_gc(bad);
      CHECK(rb.is_gc == want);
      if (!want) CHECK(rb.witness.has_value());
      want ? ++yes : ++no;
    }
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("best abstraction of a GC is the least cover") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gen_gc(seed, {5, 6});
    for (auto x : oracle::downsets(oracle::relation(g.carrier_order())))
      CHECK(g.alpha(subset_from_mask(g.carrier().size(), x)) == oracle::best_alpha(g, x));
  }
}

TEST_CASE("constructive class checkers agree with their oracles") {
  std::mt19937_64 rng(23);
  std::array<int, 3> rejected{};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto c = gen_cgc(seed, {6, 6});
    REQUIRE(check_cgc(c).ok);
    const auto bc = perturb(c, rng);
    CHECK(check_cgc(bc).ok == oracle::cgc(bc));
    rejected[0] += !oracle::cgc(bc);

    const auto p = gen_cgp(seed, {6, 6});
    REQUIRE(check_cgp(p).ok);
    const auto bp = perturb(p, rng);
    CHECK(check_cgp(bp).ok == oracle::cgp(bp));
    rejected[1] += !oracle::cgp(bp);

    const auto q = gen_pcgc(seed, {6, 6});
    REQUIRE(check_pcgc(q).ok());
    const auto bq = perturb(q, rng);
    const auto r = check_pcgc(bq);
    CHECK(r.cond1 == oracle::pcgc_cond1(bq));
    CHECK(r.cond2 == oracle::pcgc_cond2(bq));
    rejected[2] += !(r.cond1 && r.cond2);
  }
  for (int n : rejected) CHECK(n > 0);
}

TEST_CASE("reported witnesses are the first failure in search order") {
  std::mt19937_64 rng(29);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto c = perturb(gen_cgc_over(seed, Carrier::saturating(3), 4), rng);
    const auto r = check_cgc(c);
    std::optional<std::pair<std::string, std::string>> first;
    for (std::size_t y = 0; y < c.abstract().size() && !first; ++y)
      for (auto x : c.carrier().search_order())
        if (!cgc_corr_holds_at(c, x, y)) {
          first = {c.carrier().name(x), c.abstract().name(y)};
          break;
        }
    REQUIRE(r.ok == !first.has_value());
    if (first) {
      CHECK(r.witness->concrete == first->first);
      CHECK(r.witness->abstract == first->second);
    }
  }
}

TEST_CASE("closure operators") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = gen_cgc(seed, {6, 6});
    const auto phi = t_cco(c);
    CHECK(check_cco(phi).ok);
    auto table = phi.phi_table();
    const auto n = table.size();
    table[seed % n].flip((seed / 7) % n);
    const ClosureOp bad(phi.carrier(), table);
    bool want = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (table[y].test(x) != (table[x] == table[y])) want = false;
    CHECK(check_cco(bad).ok == want);
  }
}

TEST_CASE("partitioning classification") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = gen_pgc(seed, {6, 6});
    CHECK(classify_partitioning(g).kind == Partitioning::pgc);
    const auto h = gen_ppgc(seed, {6, 6});
    const auto k = classify_partitioning(h).kind;
    CHECK(k == (oracle::pgc(h) ? Partitioning::pgc : Partitioning::ppgc));
    CHECK(oracle::ppgc(h));
  }
  CHECK(classify_partitioning(sign_pgi(4)).kind == Partitioning::pgc);
  CHECK(classify_partitioning(sign_minus_ppgc(4)).kind == Partitioning::ppgc);
  const auto d = classify_partitioning(interval_gi_d(10));
  CHECK(d.kind == Partitioning::neither);
  CHECK_FALSE(d.partition.ok());
}

TEST_CASE("prt lists blocks in order of first occurrence") {
  const auto g = sign_pgi(2);
  const auto blocks = prt(g);
  REQUIRE(blocks.size() == 3);
  const auto& A = g.carrier();
  CHECK(A.format(blocks[0]) == "{-2,-1}");
  CHECK(A.format(blocks[1]) == "{0}");
  CHECK(A.format(blocks[2]) == "{1,2}");
}

TEST_CASE("precision comparisons") {
  const auto A = Carrier::atoms({"a", "b", "c", "d"});
  auto cgc_of = [&](IndexMap eta, std::size_t k) {
    std::vector<std::string> names;
    SetMap mu(k, Subset(4));
    for (std::size_t b = 0; b < k; ++b) names.push_back("b" + std::to_string(b));
    for (std::size_t a = 0; a < 4; ++a) mu[eta[a]].set(a);
    return ConstructiveConnection(Kind::cgc, A, Poset::discrete(names), std::move(eta), std::move(mu));
  };
  const auto fine = cgc_of({0, 1, 2, 2}, 3);
  const auto coarse = cgc_of({0, 0, 1, 1}, 2);
  const auto other = cgc_of({0, 1, 1, 0}, 2);
  const auto junk = cgc_of({1, 0, 2, 2}, 4);  // same partition as fine, with an unused value
  CHECK(precision_cmp(fine, coarse) == Precision::strictly_finer);
  CHECK(precision_cmp(coarse, fine) == Precision::strictly_coarser);
  CHECK(precision_cmp(coarse, other) == Precision::incomparable);
  CHECK(precision_cmp(fine, junk) == Precision::isomorphic);
  CHECK(nonempty_iso(fine, junk));
  CHECK(precision_cmp(t_pgc(fine), t_pgc(coarse)) == Precision::strictly_finer);
  CHECK(precision_cmp(t_pgc(fine), t_pgc(junk)) == Precision::isomorphic);

  const auto r = renaming_witnesses(fine, junk);
  CHECK(verify_renaming(fine, junk, r));
  CHECK(r.forward.at(0) == 1);
  CHECK_THROWS_AS(renaming_witnesses(fine, coarse), Error);

  CHECK(is_cgi(fine));
  CHECK_FALSE(is_cgi(junk));
}

TEST_CASE("embeddings between constructive classes") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = gen_cgc(seed, {6, 6});
    const auto p = embed_cgc_to_pcgc(c);
    CHECK(oracle::pcgc_cond1(p));
    CHECK(oracle::pcgc_cond2(p));
    CHECK(oracle::cgp(embed_pcgc_to_cgp(p)));
  }
  try {
    embed_cgc_to_pcgc(plustop_cgp(4));
    FAIL("plustop accepted as a CGC");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInClass);
  }
}

TEST_CASE("precision on the sign and parity domains") {
  // The blocks of the sign GI are the concretizations of the sign CGC.
  CHECK(nonempty_iso(t_cgc_of_pgc(sign_pgi(4)), sign_cgc(4)));
  CHECK(precision_cmp(sign_minus_ppgc(4), sign_pgi(4)) == Precision::strictly_coarser);
  CHECK(precision_cmp(sign_pgi(4), sign_pgi(4)) == Precision::isomorphic);

  const auto par = parity(4);
  const auto& A = par.carrier();
  const ConstructiveConnection one(Kind::cgc, A, Poset::discrete({"all"}), IndexMap(A.size(), 0), {A.all()});
  CHECK(precision_cmp(par, one) == Precision::strictly_finer);
  CHECK(precision_cmp(one, par) == Precision::strictly_coarser);

  // Sign blocks over the parity carrier: incomparable with parity.
  IndexMap eta(A.size());
  SetMap mu(3, A.empty());
  for (std::size_t a = 0; a < A.size(); ++a) {
    eta[a] = A.value(a) < 0 ? 0 : A.value(a) == 0 ? 1 : 2;
    mu[eta[a]].set(a);
  }
  const ConstructiveConnection sign(Kind::cgc, A, Poset::discrete({"-", "0", "+"}), eta, mu);
  CHECK_FALSE(nonempty_iso(par, sign));
  CHECK(precision_cmp(par, sign) == Precision::incomparable);
  CHECK_THROWS_AS(precision_cmp(par, sign_cgc(4)), Error);
}
