#include <doctest.h>

#include "oracle.hpp"

#include "pcgc/transforms.hpp"

#include <random>

using namespace pcgc;

namespace {

FnTable random_fn(std::mt19937_64& rng, int arity, std::size_t n) {
  IndexMap t(arity == 1 ? n : n * n);
  for (auto& v : t) v = rng() % n;
  return FnTable::make(arity, n, t);
}

// BCA, sometimes moved at one point so that every property can fail.
AbstractFn candidate(std::mt19937_64& rng, const AbstractFn& best, std::size_t values) {
  auto t = best.table;
  if (rng() % 2) t[rng() % t.size()] = rng() % values;
  return FnTable::make(best.arity, best.n, t);
}

struct GcTruth {
  bool sound = true, optimal = true, forward = true, backward = true, precise = true;
};

// The five relationships on a GC over ℘(A), with α found by scanning.
GcTruth gc_truth(const GaloisConnection& g, const ConcreteFn& f, const AbstractFn& fs) {
  const auto n = g.carrier().size();
  const auto leq = oracle::relation(g.abstract().poset());
  const auto best = oracle::bca_gc(g, f);
  GcTruth r;
  for (std::size_t d = 0; d < best.size(); ++d) {
    r.sound = r.sound && leq[best[d]][fs(d)];
    r.optimal = r.optimal && best[d] == fs(d);
    r.forward = r.forward && oracle::image(f, oracle::to_mask(g.gamma(d))) == oracle::to_mask(g.gamma(fs(d)));
  }
  for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); ++x) {
    const auto ax = oracle::best_alpha(g, x);
    r.backward = r.backward && oracle::best_alpha(g, oracle::image(f, x)) == fs(ax);
    r.precise = r.precise && oracle::image(f, x) == oracle::to_mask(g.gamma(fs(ax)));
  }
  return r;
}

}  // namespace

TEST_CASE("function tables") {
  CHECK_THROWS_AS(FnTable::make(1, 3, {0, 1}), Error);
  CHECK_THROWS_AS(FnTable::make(1, 2, {0, 2}), Error);
  CHECK_THROWS_AS(FnTable::make(3, 2, {0, 1}), Error);
  const auto f = FnTable::make(2, 2, {0, 1, 1, 0});
  CHECK(f(1, 0) == 1);
  CHECK(f.apply({1, 1}) == 0);
  CHECK(FnTable::identity(3).table == IndexMap{0, 1, 2});
  CHECK(FnTable::constant(2, 2, 1).table == IndexMap{1, 1, 1, 1});

  const auto A = Carrier::saturating(3);
  const auto add = int_binary(A, [](auto x, auto y) { return x + y; });
  CHECK(A.value(add(A.of_value(3), A.of_value(2))) == 3);
  const auto neg = int_unary(Carrier::modular(3), [](auto x) { return -x; });
  CHECK(Carrier::modular(3).value(neg(Carrier::modular(3).of_value(-3))) == -3);
}

TEST_CASE("best correct approximations match scanning") {
  std::mt19937_64 rng(41);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = gen_ppgc(seed, {6, 8});
    const auto f = random_fn(rng, 1, g.carrier().size());
    CHECK(bca_gc(g, lift(f)).table == oracle::bca_gc(g, f));

    const auto c = gen_pcgc(seed, {5, 6});
    for (int arity : {1, 2}) {
      const auto h = random_fn(rng, arity, c.carrier().size());
      CHECK(bca_pcgc(c, h).table == oracle::bca_pcgc(c, h));
    }
  }
}

TEST_CASE("GC-level properties agree with their definitions") {
  std::mt19937_64 rng(43);
  std::array<int, 5> held{}, failed{};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = seed % 2 ? gen_ppgc(seed, {6, 8}) : gen_pgc(seed, {6, 6});
    const auto f = random_fn(rng, 1, g.carrier().size());
    const auto fs = candidate(rng, bca_gc(g, lift(f)), g.abstract().size());
    const auto want = gc_truth(g, f, fs);
    const std::array<std::pair<GcProperty, bool>, 5> rows{{{GcProperty::sound, want.sound},
                                                           {GcProperty::optimal, want.optimal},
                                                           {GcProperty::forward_complete, want.forward},
                                                           {GcProperty::backward_complete, want.backward},
                                                           {GcProperty::precise, want.precise}}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto r = gc_pair_property(g, {lift(f), fs}, rows[i].first);
      CHECK(r.exhaustive);
      CHECK(r.ok == rows[i].second);
      if (!r.ok) CHECK(r.witness.has_value());
      (r.ok ? held : failed)[i]++;
    }
  }
  for (int n : held) CHECK(n > 0);
  for (int n : failed) CHECK(n > 0);
}

TEST_CASE("large carriers fall back to sampling") {
  const auto g = sign_pgi(8);  // 17 values, 2^17 concrete elements
  const auto sq = concrete_op("sq", g.carrier());
  const auto sq_s = bca_gc(g, lift(sq));
  const auto want = gc_truth(g, sq, sq_s);
  const auto r = gc_pair_property(g, {lift(sq), sq_s}, GcProperty::backward_complete);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.ok == want.backward);
  const auto p = gc_pair_property(g, {lift(sq), sq_s}, GcProperty::precise);
  CHECK_FALSE(p.exhaustive);
  CHECK(p.ok == want.precise);
  CHECK_FALSE(p.ok);
}

TEST_CASE("CGC variants agree with the powerset definitions") {
  int sound = 0, unsound = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = gen_cgc_pair_instance(seed, {6, 6});
    const auto want = oracle::powerset_properties(inst.c, inst.pair);
    for (auto v : {Variant::eta_mu, Variant::mu_mu, Variant::eta_eta, Variant::mu_eta, Variant::all})
      CHECK(cgc_soundness(inst.c, inst.pair, v).ok == want.sound);
    CHECK(cgc_completeness(inst.c, inst.pair, Variant::eta_mu).ok == want.optimal);
    CHECK(cgc_completeness(inst.c, inst.pair, Variant::mu_mu).ok == want.forward);
    CHECK(cgc_completeness(inst.c, inst.pair, Variant::eta_eta).ok == want.backward);
    CHECK(cgc_completeness(inst.c, inst.pair, Variant::mu_eta).ok == want.precise);
    CHECK_THROWS_AS(cgc_completeness(inst.c, inst.pair, Variant::all), Error);
    (want.sound ? sound : unsound)++;
  }
  CHECK(sound > 0);
  CHECK(unsound > 0);
  CHECK(parse_variant("ημ") == Variant::eta_mu);
  CHECK(parse_variant("mu_eta") == Variant::mu_eta);
}

TEST_CASE("PCGC soundness and properties agree with their definitions") {
  std::array<int, 4> held{};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = gen_pcgc_pair_instance(seed, 1, {6, 6});
    const auto& c = inst.c;
    const auto& f = inst.pair.f;
    const auto& fs = inst.pair.f_sharp;
    const auto rel = oracle::relation(c.abstract());
    const auto n = c.carrier().size();

    const bool sound = oracle::pcgc_sound(c, inst.pair);
    CHECK(pcgc_sound(c, inst.pair).ok == sound);

    const bool optimal = fs.table == oracle::bca_pcgc(c, f);
    bool forward = true, backward = true;
    for (std::size_t b = 0; b < c.abstract().size(); ++b)
      forward = forward && oracle::image(f, oracle::to_mask(c.mu(b))) == oracle::to_mask(c.mu(fs(b)));
    auto eta_vee = [&](oracle::Mask x) {
      std::vector<std::size_t> vals;
      for (std::size_t a = 0; a < n; ++a)
        if (oracle::in(x, a)) vals.push_back(c.eta(a));
      return oracle::lub_or_throw(rel, vals);
    };
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); ++x)
      backward = backward && eta_vee(oracle::image(f, x)) == fs(eta_vee(x));
    CHECK(pcgc_pair_property(c, inst.pair, PcgcProperty::optimal).ok == optimal);
    CHECK(pcgc_pair_property(c, inst.pair, PcgcProperty::forward_complete).ok == forward);
    CHECK(pcgc_pair_property(c, inst.pair, PcgcProperty::backward_complete).ok == backward);
    held[0] += sound;
    held[1] += optimal;
    held[2] += forward;
    held[3] += backward;

    const auto bin = gen_pcgc_pair_instance(seed, 2, {5, 5});
    CHECK(pcgc_sound(bin.c, bin.pair).ok == oracle::pcgc_sound(bin.c, bin.pair));
    CHECK(pcgc_pair_property(bin.c, bin.pair, PcgcProperty::optimal).ok ==
          (bin.pair.f_sharp.table == oracle::bca_pcgc(bin.c, bin.pair.f)));
  }
  for (int k : held) CHECK(k > 0);
}

TEST_CASE("moving pairs between a PGI and its CGC") {
  const auto g = sign_pgi(3);
  const auto sq = concrete_op("sq", g.carrier());
  const auto sq_s = bca_gc(g, lift(sq));
  CHECK(is_block_preserving(g, sq_s).ok);
  const auto r = restrict_to_blocks(g, sq_s);
  const auto c = t_cgc_of_pgc(g);
  CHECK(c.abstract().name(r(c.abstract().index("<0"))) == ">0");
  const auto back = pair_to_cgc(g, sq, sq_s);
  CHECK(cgc_soundness(c, back, Variant::all).ok);

  // A sound but not block-preserving abstraction: everything to ℤ.
  const auto top = FnTable::constant(1, g.abstract().size(), g.abstract().top());
  CHECK(gc_pair_property(g, {lift(sq), top}, GcProperty::sound).ok);
  CHECK_FALSE(is_block_preserving(g, top).ok);
  try {
    pair_to_cgc(g, sq, top);
    FAIL("pair accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBlockPreserving);
  }
  // Unsound: <0 ↦ <0.
  auto bad = sq_s.table;
  bad[g.abstract().index("<0")] = g.abstract().index("<0");
  try {
    pair_to_cgc(g, sq, FnTable::make(1, bad.size(), bad));
    FAIL("pair accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSound);
  }
  // Not a GI.
  const auto p = gen_pgc(3, {4, 4});
  if (!check_gc(p).is_gi) {
    try {
      pair_to_cgc(p, FnTable::identity(p.carrier().size()), FnTable::identity(p.abstract().size()));
      FAIL("pair accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotGI);
    }
  }
  try {
    is_block_preserving(sign_minus_ppgc(3), FnTable::identity(sign_minus_ppgc(3).abstract().size()));
    FAIL("PPGC accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInClass);
  }
}

TEST_CASE("pair isomorphism across renamed CGCs") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = gen_cgc(seed, {6, 6});
    if (!is_cgi(c)) continue;
    const auto pair = gen_sound_pair(seed, c);
    const auto g = t_pgc(c);
    const auto c2 = t_cgc_of_pgc(g);
    const auto p2 = pair_to_cgc(g, pair.f, bca_gc(g, lift(pair.f)));
    bool want = true;
    for (std::size_t a = 0; a < c.carrier().size(); ++a)
      want = want && c.mu(pair.f_sharp(c.eta(a))) == c2.mu(p2.f_sharp(c2.eta(a)));
    CHECK(want);
    CHECK(pair_iso(c, pair, c2, p2) == want);

    // Against a coarser abstraction of the same function.
    const auto top = FnTable::constant(1, c.abstract().size(), pair.f_sharp(c.eta(0)));
    if (cgc_soundness(c, {pair.f, top}, Variant::all).ok) {
      bool same = true;
      for (std::size_t a = 0; a < c.carrier().size(); ++a)
        same = same && c.mu(top(c.eta(a))) == c2.mu(p2.f_sharp(c2.eta(a)));
      CHECK(pair_iso(c, {pair.f, top}, c2, p2) == same);
    }
    ++compared;
  }
  CHECK(compared > 20);
  try {
    const auto c = sign_cgc(2);
    pair_iso(c, {FnTable::identity(5), FnTable::constant(1, c.abstract().size(), 0)}, c,
             {FnTable::identity(5), FnTable::identity(c.abstract().size())});
    FAIL("unsound pair accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSound);
  }
}

TEST_CASE("μμ over all of B agrees with μμ over η(A)") {
  int with_junk = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = gen_cgc_pair_instance(seed, {6, 6});
    const auto& c = inst.c;
    const auto img = c.eta_image();
    with_junk += img.count() < c.abstract().size();
    bool restricted = true;
    for (std::size_t y = 0; y < c.abstract().size(); ++y)
      if (img.test(y))
        for (std::size_t x = 0; x < c.carrier().size(); ++x)
          if (c.mu(y).test(x)) restricted = restricted && c.mu(inst.pair.f_sharp(y)).test(inst.pair.f(x));
    CHECK(cgc_soundness(c, inst.pair, Variant::mu_mu).ok == restricted);
  }
  CHECK(with_junk > 0);
}
