// Acceptance run: one PASS/FAIL line per criterion, with elapsed time and a
// short detail. Exit status is nonzero if any criterion fails.

#include "oracle.hpp"

#include "pcgc/io.hpp"
#include "pcgc/transforms.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

using namespace pcgc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failure messages.
struct Tally {
  std::size_t cases = 0, failures = 0;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ++failures;
    if (notes.size() < 3) notes.push_back(what);
  }
  Outcome outcome(std::string summary) const {
    if (failures) {
      summary += "; " + std::to_string(failures) + " failures";
      for (const auto& n : notes) summary += " | " + n;
    }
    return {failures == 0, summary};
  }
};

std::string seed_note(const char* what, std::uint64_t seed) { return std::string(what) + " at seed " + std::to_string(seed); }

const GenParams kParams{8, 8};

// --- 1 ---------------------------------------------------------------------

Outcome sq_table() {
  Tally t;
  const auto g = sign_pgi(64);
  const auto table = bca_gc(g, lift(concrete_op("sq", g.carrier())));
  const auto& d = g.abstract();
  const std::vector<std::pair<const char*, const char*>> printed{
      {"∅", "∅"},   {"<0", ">0"}, {"=0", "=0"}, {">0", ">0"},
      {"≤0", "≥0"}, {"≠0", ">0"}, {"≥0", "≥0"}, {"ℤ", "≥0"}};
  t.expect(table.n == printed.size(), "table size");
  std::string rendered;
  for (auto [from, to] : printed) {
    const auto got = d.name(table(d.index(from)));
    t.expect(got == to, std::string(from) + " ↦ " + got);
    rendered += (rendered.empty() ? "" : ", ") + std::string(from) + "↦" + got;
  }
  // Scanning oracle on a small carrier agrees with the library.
  const auto small = sign_pgi(5);
  const auto fs = bca_gc(small, lift(concrete_op("sq", small.carrier())));
  t.expect(fs.table == oracle::bca_gc(small, concrete_op("sq", small.carrier())), "oracle mismatch at N=5");
  return t.outcome("{" + rendered + "}");
}

// --- 2 ---------------------------------------------------------------------

Outcome times_table() {
  Tally t;
  const auto c = signconst_pcgc(64);
  const auto& b = c.abstract();
  const auto& l = c.require_lattice();
  const auto tab = bca_pcgc(c, concrete_op("mul", c.carrier()));
  auto at = [&](const char* x, const char* y) { return l.name(tab(b.index(x), b.index(y))); };
  t.expect(at("2", "<0") == "<0", "⊗♯(2,<0) = " + at("2", "<0"));
  t.expect(at("-2", "≤0") == "≥0", "⊗♯(-2,≤0) = " + at("-2", "≤0"));

  // ∨ of η over {2,4} ⊗ {-1,0}, by the library and by scanning.
  const auto& A = c.carrier();
  Subset img(b.size());
  std::vector<std::size_t> vals;
  for (std::int64_t x : {2, 4})
    for (std::int64_t y : {-1, 0}) {
      const auto v = c.eta(A.normalize(x * y));
      img.set(v);
      vals.push_back(v);
    }
  const auto joined = l.lub(img);
  t.expect(l.name(joined) == "≤0", "η∨ = " + l.name(joined));
  t.expect(oracle::lub_or_throw(oracle::relation(b), vals) == joined, "oracle lub differs");
  t.expect(at(">0", "≤0") == "≤0", "⊗♯(>0,≤0) = " + at(">0", "≤0"));

  const auto small = signconst_pcgc(4);
  t.expect(bca_pcgc(small, concrete_op("mul", small.carrier())).table ==
               oracle::bca_pcgc(small, concrete_op("mul", small.carrier())),
           "oracle mismatch at N=4");
  return t.outcome("⊗♯(2,<0)=" + at("2", "<0") + ", ⊗♯(-2,≤0)=" + at("-2", "≤0") + ", η∨(⊗◇({2,4},{-1,0}))=" +
                   l.name(joined) + "=⊗♯(>0,≤0)");
}

// --- 3 ---------------------------------------------------------------------

Outcome loop_invariant() {
  const auto p = parse_program(read_text(std::filesystem::path(PCGC_SOURCE_DIR) / "examples_while/doubling_loop.while"));
  const Analyzer a(signconst_pcgc(64));
  const auto r = a.run(p);
  std::size_t head = 0;
  for (const auto& s : p.stmts)
    if (s.kind == Stmt::Kind::while_loop) head = s.label;
  const auto got = a.format_state(r.vars, r.states[head]);
  return {got == "{x ↦ >0, y ↦ 2}", "L" + std::to_string(head) + ": " + got};
}

// --- 4 ---------------------------------------------------------------------

Outcome cgc_pgc_round_trip() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 500; ++seed, ++t.cases) {
    const auto c = gen_cgc(seed, kParams);
    const auto g = t_pgc(c);
    t.expect(classify_partitioning(g).kind == Partitioning::pgc, seed_note("classify", seed));
    t.expect(oracle::pgc(g), seed_note("oracle PGC", seed));
    const auto back = t_cgc_of_pgc(g);
    t.expect(oracle::cgc(back), seed_note("oracle CGC", seed));
    t.expect(nonempty_iso(back, c), seed_note("nonempty_iso", seed));
    t.expect(oracle::nonempty_images(back) == oracle::nonempty_images(c), seed_note("oracle images", seed));
  }
  return t.outcome(std::to_string(t.cases) + " CGCs");
}

// --- 5 ---------------------------------------------------------------------

Outcome precision_transfer() {
  Tally t;
  std::size_t finer = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed, ++t.cases) {
    const auto [c1, c2] = gen_cgc_pair(seed, kParams);
    const bool lhs = cgc_refines(c1, c2);
    const auto cmp = precision_cmp(t_pgc(c1), t_pgc(c2));
    const bool rhs = cmp == Precision::strictly_finer || cmp == Precision::isomorphic;
    const auto i1 = oracle::gc_image(t_pgc(c1));
    const auto i2 = oracle::gc_image(t_pgc(c2));
    const bool rhs_oracle = std::includes(i1.begin(), i1.end(), i2.begin(), i2.end());
    t.expect(lhs == rhs, seed_note("C1 ⊑ C2 vs T(C1) ⊑ T(C2)", seed));
    t.expect(lhs == oracle::refines(c1, c2), seed_note("oracle refinement", seed));
    t.expect(rhs == rhs_oracle, seed_note("oracle image inclusion", seed));
    finer += lhs;
  }
  return t.outcome(std::to_string(t.cases) + " pairs, " + std::to_string(finer) + " with C1 ⊑ C2");
}

// --- 6 ---------------------------------------------------------------------

Outcome soundness_completeness_transfer() {
  Tally t;
  std::size_t sound = 0;
  std::array<std::size_t, 4> holds{};
  const std::array<std::pair<Variant, GcProperty>, 4> pairing{{{Variant::eta_mu, GcProperty::optimal},
                                                               {Variant::mu_mu, GcProperty::forward_complete},
                                                               {Variant::eta_eta, GcProperty::backward_complete},
                                                               {Variant::mu_eta, GcProperty::precise}}};
  for (std::uint64_t seed = 0; seed < 300; ++seed, ++t.cases) {
    const auto inst = gen_cgc_pair_instance(seed, kParams);
    const auto& c = inst.c;
    const auto g = t_pgc(c);
    const auto lifted = pair_to_pgc(c, inst.pair);
    const auto brute = oracle::powerset_properties(c, inst.pair);

    const bool s_cgc = cgc_soundness(c, inst.pair, Variant::all).ok;
    const bool s_gc = gc_pair_property(g, lifted, GcProperty::sound).ok;
    t.expect(s_cgc == s_gc, seed_note("soundness transfer", seed));
    t.expect(s_gc == brute.sound, seed_note("oracle soundness", seed));
    sound += s_cgc;

    const std::array<bool, 4> expected{brute.optimal, brute.forward, brute.backward, brute.precise};
    for (std::size_t i = 0; i < 4; ++i) {
      const auto [variant, property] = pairing[i];
      const bool cmp = cgc_completeness(c, inst.pair, variant).ok;
      const bool gcp = gc_pair_property(g, lifted, property).ok;
      t.expect(cmp == gcp, seed_note(std::string(to_string(variant)).c_str(), seed));
      t.expect(gcp == expected[i], seed_note("oracle completeness", seed));
      holds[i] += cmp;
    }
  }
  std::ostringstream s;
  s << t.cases << " instances, " << sound << " sound; complete ημ/μμ/ηη/μη: " << holds[0] << "/" << holds[1] << "/"
    << holds[2] << "/" << holds[3];
  return t.outcome(s.str());
}

// --- 7 ---------------------------------------------------------------------

Outcome cgp_gc_round_trip() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 200; ++seed, ++t.cases) {
    const auto g = gen_gc(seed, kParams);
    t.expect(oracle::gc(g), seed_note("generated GC fails the oracle", seed));
    const auto c = t_cgp(g);
    t.expect(check_cgp(c).ok && oracle::cgp(c), seed_note("t_cgp output is not a CGP", seed));
    const auto back = t_gc(c);
    t.expect(oracle::gc(back), seed_note("t_gc output fails the oracle", seed));
    const auto rel = oracle::relation(g.carrier_order());
    for (auto x : oracle::downsets(rel)) {
      const auto s = subset_from_mask(g.carrier().size(), x);
      t.expect(back.alpha(s) == g.alpha(s), seed_note("α changed", seed));
    }
    t.expect(back.gamma_table() == g.gamma_table(), seed_note("γ changed", seed));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed, ++t.cases) {
    const auto c = gen_cgp(seed, kParams);
    const auto back = t_cgp(t_gc(c));
    t.expect(back.eta_table() == c.eta_table() && back.mu_table() == c.mu_table() && back.abstract() == c.abstract(),
             seed_note("t_cgp ∘ t_gc is not the identity", seed));
  }
  return t.outcome(std::to_string(t.cases) + " round trips (200 GCs, 200 CGPs)");
}

// --- 8 ---------------------------------------------------------------------

Outcome pcgc_ppgc() {
  Tally t;
  std::size_t sound = 0, strict_ppgc = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed, ++t.cases) {
    const auto g = gen_ppgc(seed, kParams);
    t.expect(oracle::ppgc(g), seed_note("generated PPGC fails the oracle", seed));
    strict_ppgc += !oracle::pgc(g);
    const auto c = t_pcgc(g);
    t.expect(oracle::pcgc_cond1(c) && oracle::pcgc_cond2(c), seed_note("t_pcgc output fails the oracle", seed));
    const auto back = t_ppgc(c);
    const auto n = g.carrier().size();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const auto s = subset_from_mask(n, x);
      t.expect(back.alpha(s) == g.alpha(s), seed_note("α changed", seed));
    }
    t.expect(back.gamma_table() == g.gamma_table(), seed_note("γ changed", seed));

    const auto pc = gen_pcgc(seed, kParams);
    const auto again = t_pcgc(t_ppgc(pc));
    t.expect(again.eta_table() == pc.eta_table() && again.mu_table() == pc.mu_table(),
             seed_note("t_pcgc ∘ t_ppgc is not the identity", seed));

    for (int arity : {1, 2}) {
      const auto inst = gen_pcgc_pair_instance(seed, arity, kParams);
      const bool s = pcgc_sound(inst.c, inst.pair).ok;
      t.expect(s == oracle::pcgc_sound(inst.c, inst.pair), seed_note("oracle PCGC soundness", seed));
      if (arity == 1) {
        const auto ppgc = t_ppgc(inst.c);
        const bool s_gc = gc_pair_property(ppgc, {lift(inst.pair.f), inst.pair.f_sharp}, GcProperty::sound).ok;
        t.expect(s == s_gc, seed_note("soundness transfer", seed));
        t.expect(s_gc == oracle::gc_sound(ppgc, inst.pair), seed_note("oracle GC soundness", seed));
        sound += s;
      }
    }
  }
  return t.outcome(std::to_string(t.cases) + " cases, " + std::to_string(strict_ppgc) + " PPGCs not PGCs, " +
                   std::to_string(sound) + " sound unary pairs");
}

// --- 9 ---------------------------------------------------------------------

Outcome negative_fixtures() {
  Tally t;
  std::string seen;
  auto witness = [&](const std::optional<Witness>& w, const char* x, const char* y, const char* what) {
    const bool ok = w && w->concrete == x && w->abstract == y;
    t.expect(ok, std::string(what) + (w ? " gave (" + w->concrete + "," + w->abstract + ")" : " gave none"));
    if (w) seen += (seen.empty() ? "" : ", ") + std::string(what) + " (" + w->concrete + "," + w->abstract + ")";
  };
  const auto pt = plustop_cgp(64);
  const auto a = check_cgc(pt);
  t.expect(!a.ok, "plustop passes check_cgc");
  witness(a.witness, "1", "⊤", "cgc");

  const auto b = check_pcgc(interval_bprime(64));
  t.expect(b.cond1 && !b.cond2, "interval_bprime conditions");
  witness(b.witness2, "10", "[-10,10]", "pcgc(2)");

  const auto c = check_pcgc(pt);
  t.expect(!c.cond1, "plustop passes condition (1)");
  witness(c.witness1, "1", "⊤", "pcgc(1)");
  t.expect(pt.abstract().name(pt.eta(pt.carrier().index("0"))) == "⊤", "η(0) ≠ ⊤");

  const auto k = classify_partitioning(interval_gi_d(64)).kind;
  t.expect(k == Partitioning::neither, "interval_gi_d is " + std::string(to_string(k)));
  return t.outcome(seen + ", interval_gi_d " + std::string(to_string(k)));
}

// --- 10 --------------------------------------------------------------------

void cgc_properties(const ConstructiveConnection& c, Tally& t, const std::string& tag) {
  const auto n = c.carrier().size();
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      const bool same = c.eta(a1) == c.eta(a2);
      const bool same_mu = c.mu(c.eta(a1)) == c.mu(c.eta(a2));
      const bool meet = (c.mu(c.eta(a1)) & c.mu(c.eta(a2))).any();
      t.expect(same == same_mu && same_mu == meet, tag + ": CGC property (1)");
    }
  const auto img = c.eta_image();
  for (std::size_t b = 0; b < c.abstract().size(); ++b)
    t.expect(c.mu(b).none() == !img.test(b), tag + ": CGC property (2)");
}

// ⟨η∨, ℘↓(A), B, μ⟩ is a GC: every downset X, with η∨ found by scanning.
bool eta_vee_is_gc(const ConstructiveConnection& c) {
  const auto rel_a = oracle::relation(c.carrier_order());
  const auto rel_b = oracle::relation(c.abstract());
  const auto n = c.carrier().size();
  const auto nb = c.abstract().size();
  std::vector<oracle::Mask> mu;
  for (std::size_t b = 0; b < nb; ++b) mu.push_back(oracle::to_mask(c.mu(b)));
  std::map<oracle::Mask, std::size_t> memo;  // η-image mask -> lub
  for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); ++x) {
    if (!c.carrier_order().is_discrete() && !oracle::is_downset(rel_a, x)) continue;
    oracle::Mask img = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (oracle::in(x, a)) img |= oracle::Mask{1} << c.eta(a);
    auto it = memo.find(img);
    if (it == memo.end()) {
      std::vector<std::size_t> elems;
      for (std::size_t b = 0; b < nb; ++b)
        if (oracle::in(img, b)) elems.push_back(b);
      it = memo.emplace(img, oracle::lub_or_throw(rel_b, elems)).first;
    }
    for (std::size_t d = 0; d < nb; ++d)
      if (rel_b[it->second][d] != oracle::subset(x, mu[d])) return false;
  }
  return true;
}

void cgp_properties(const ConstructiveConnection& c, Tally& t, const std::string& tag) {
  const auto n = c.carrier().size();
  const auto rel_b = oracle::relation(c.abstract());
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      t.expect((c.eta(a1) == c.eta(a2)) == (c.mu(c.eta(a1)) == c.mu(c.eta(a2))), tag + ": CGP property (1)");
  const auto img = c.eta_image();
  for (std::size_t b = 0; b < c.abstract().size(); ++b) {
    bool below = false;
    for (std::size_t e = 0; e < c.abstract().size(); ++e) below = below || (rel_b[e][b] && img.test(e));
    t.expect(c.mu(b).none() == !below, tag + ": CGP property (2)");
  }
  if (c.abstract_lattice()) {
    t.expect(eta_vee_is_gc(c), tag + ": CGP property (3)");
    // (4): μ(B) = μ(η∨(℘↓(A))).
    const auto g = t_gc(c);
    std::vector<oracle::Mask> all, reached;
    for (std::size_t b = 0; b < c.abstract().size(); ++b) all.push_back(oracle::to_mask(c.mu(b)));
    for (auto x : oracle::downsets(oracle::relation(c.carrier_order())))
      reached.push_back(oracle::to_mask(c.mu(g.alpha(subset_from_mask(n, x)))));
    for (auto* v : {&all, &reached}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    t.expect(all == reached, tag + ": CGP property (4)");
  }
}

void pcgc_properties(const ConstructiveConnection& c, Tally& t, const std::string& tag, bool& converse_fails) {
  const auto n = c.carrier().size();
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      const bool same = c.eta(a1) == c.eta(a2);
      const bool same_mu = c.mu(c.eta(a1)) == c.mu(c.eta(a2));
      const bool meet = (c.mu(c.eta(a1)) & c.mu(c.eta(a2))).any();
      t.expect(same == same_mu && same_mu == meet, tag + ": PCGC property (1)");
    }
  const auto img = c.eta_image();
  for (std::size_t b = 0; b < c.abstract().size(); ++b) {
    if (c.mu(b).none()) t.expect(!img.test(b), tag + ": PCGC property (2)");
    if (!img.test(b) && c.mu(b).any()) converse_fails = true;
  }
  if (c.abstract_lattice()) t.expect(eta_vee_is_gc(c), tag + ": PCGC property (3)");
}

// Direct check of the renaming conditions.
bool renaming_valid(const ConstructiveConnection& c1, const ConstructiveConnection& c2, const Renaming& r) {
  const auto i1 = members(c1.eta_image());
  const auto i2 = members(c2.eta_image());
  if (r.forward.size() != i1.size() || r.backward.size() != i2.size()) return false;
  for (auto b : i1)
    if (!r.forward.count(b) || !r.backward.count(r.forward.at(b)) || r.backward.at(r.forward.at(b)) != b) return false;
  for (auto b : i2)
    if (!r.backward.count(b) || !r.forward.count(r.backward.at(b)) || r.forward.at(r.backward.at(b)) != b) return false;
  for (std::size_t a = 0; a < c1.carrier().size(); ++a) {
    if (c1.mu(c1.eta(a)) != c2.mu(r.forward.at(c1.eta(a)))) return false;
    if (c2.mu(c2.eta(a)) != c1.mu(r.backward.at(c2.eta(a)))) return false;
  }
  return true;
}

Outcome property_suites() {
  Tally t;
  // Builtins: small bounds keep the exhaustive subset enumerations finite.
  std::vector<std::pair<std::string, ConstructiveConnection>> cgcs{
      {"parity", parity(8)}, {"sign_cgc", sign_cgc(8)}, {"t_cgc(sign_pgi)", t_cgc_of_pgc(sign_pgi(8))}};
  std::vector<std::pair<std::string, ConstructiveConnection>> pcgcs{
      {"interval_pcgc", interval_pcgc(10)},
      {"signconst_pcgc", signconst_pcgc(4)},
      {"t_pcgc(sign_pgi)", t_pcgc(sign_pgi(8))},
      {"t_pcgc(sign_minus_ppgc)", t_pcgc(sign_minus_ppgc(8))}};
  std::vector<std::pair<std::string, ConstructiveConnection>> cgps{
      {"plustop_cgp", plustop_cgp(8)}, {"t_cgp(interval_gi_d)", t_cgp(interval_gi_d(10))}};
  for (const auto& [name, c] : pcgcs) cgps.emplace_back(name, embed_pcgc_to_cgp(c));
  for (const auto& [name, c] : cgcs) pcgcs.emplace_back(name, embed_cgc_to_pcgc(c));

  bool converse_fails = false;
  for (const auto& [name, c] : cgcs) {
    cgc_properties(c, t, name);
    t.expect(renaming_valid(c, c, renaming_witnesses(c, c)), name + ": self renaming");
  }
  for (const auto& [name, c] : pcgcs) pcgc_properties(c, t, name, converse_fails);
  t.expect(converse_fails, "no builtin shows μ(b) ≠ ∅ with b ∉ η(A)");
  for (const auto& [name, c] : cgps) cgp_properties(c, t, name);

  // singleton transfer on the sign PGI with sq and its BCA.
  {
    const auto g = sign_pgi(8);
    const auto sq = concrete_op("sq", g.carrier());
    const auto sq_s = bca_gc(g, lift(sq));
    const auto r = pair_to_cgc(g, sq, sq_s);
    for (std::size_t a = 0; a < g.carrier().size(); ++a) {
      const auto n = g.carrier().size();
      t.expect(sq_s(g.alpha(singleton(n, a))) == g.alpha(singleton(n, sq(a))), "sign: singleton transfer (i)");
      t.expect(oracle::subset(oracle::image(sq, oracle::to_mask(g.gamma(g.alpha(singleton(n, a))))),
                              oracle::to_mask(g.gamma(g.alpha(singleton(n, sq(a)))))),
               "sign: singleton transfer (ii)");
    }
    t.expect(r.f == sq, "sign: T_CGC keeps the concrete function");
  }

  std::size_t iso_pairs = 0, non_iso_pairs = 0, transfer_cases = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto tag = "seed " + std::to_string(seed);
    const auto c = gen_cgc(seed, kParams);
    cgc_properties(c, t, tag);
    const auto cp = gen_cgp(seed, kParams);
    cgp_properties(cp, t, tag);
    const auto pc = gen_pcgc(seed, kParams);
    pcgc_properties(pc, t, tag, converse_fails);

    // CGC Isomorphism, witness construction on a round trip.
    const auto rt = t_cgc_of_pgc(t_pgc(c));
    const auto r = renaming_witnesses(c, rt);
    t.expect(verify_renaming(c, rt, r) && renaming_valid(c, rt, r), tag + ": renaming of the round trip");

    // ...and on arbitrary pairs: a renaming exists exactly for isomorphic ones.
    const auto [c1, c2] = gen_cgc_pair(seed, kParams);
    const bool iso = oracle::nonempty_images(c1) == oracle::nonempty_images(c2);
    t.expect(iso == nonempty_iso(c1, c2), tag + ": nonempty_iso");
    try {
      const auto r2 = renaming_witnesses(c1, c2);
      t.expect(iso && renaming_valid(c1, c2, r2), tag + ": renaming for a non-isomorphic pair");
      ++iso_pairs;
    } catch (const Error& e) {
      t.expect(!iso && e.kind() == ErrorKind::NotIsomorphic, tag + ": no renaming for an isomorphic pair");
      ++non_iso_pairs;
    }

    // singleton transfer on a PGI with a sound block-preserving BCA.
    const auto cgi = gen_cgc(seed, {kParams.amax, kParams.bmax});
    if (is_cgi(cgi)) {
      const auto pair = gen_sound_pair(seed, cgi);
      const auto g = t_pgc(cgi);
      const auto gs = bca_gc(g, lift(pair.f));
      if (is_block_preserving(g, gs).ok) {
        ++transfer_cases;
        const auto n = g.carrier().size();
        for (std::size_t a = 0; a < n; ++a) {
          const auto block = g.alpha(singleton(n, a));
          t.expect(gs(block) == g.alpha(singleton(n, pair.f(a))), tag + ": singleton transfer (i)");
          t.expect(oracle::subset(oracle::image(pair.f, oracle::to_mask(g.gamma(block))),
                                  oracle::to_mask(g.gamma(g.alpha(singleton(n, pair.f(a)))))),
                   tag + ": singleton transfer (ii)");
        }
        const auto back = pair_to_cgc(g, pair.f, gs);
        t.expect(cgc_soundness(t_cgc_of_pgc(g), back, Variant::all).ok, tag + ": T_CGC pair is sound");
      }
    }
  }
  t.expect(iso_pairs > 0 && non_iso_pairs > 0, "generated pairs miss one side of the isomorphism property");
  t.expect(transfer_cases >= 100, "too few singleton transfer cases: " + std::to_string(transfer_cases));
  return t.outcome(std::to_string(cgcs.size() + pcgcs.size() + cgps.size()) + " builtin checks, 500 seeds × 5 suites; " +
                   std::to_string(iso_pairs) + " isomorphic pairs, " + std::to_string(transfer_cases) +
                   " singleton transfer cases");
}

// --- 11 --------------------------------------------------------------------

Outcome analyzer_soundness() {
  Tally t;
  const auto dir = std::filesystem::path(PCGC_SOURCE_DIR) / "examples_while";
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".while") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::size_t observations = 0, unfinished = 0, violations = 0;
  for (const char* dom : {"signconst_pcgc", "interval_pcgc", "sign_pgi"}) {
    const auto a = Analyzer::for_domain(builtin(dom, 64));
    for (const auto& f : files) {
      const auto p = parse_program(read_text(f));
      const auto r = a.run(p);
      const auto run = run_concrete(p, a.domain().carrier(), kStepBudget);
      observations += run.observations.size();
      unfinished += !run.finished;
      const auto bad = soundness_violations(a, r, run);
      t.expect(bad.empty(), f.filename().string() + " under " + dom);
      violations += bad.size();
    }
  }
  const auto corpus = files.size() - 1;  // the doubling loop is not part of the corpus count
  t.expect(corpus >= 10, "corpus has " + std::to_string(corpus) + " programs");
  return t.outcome(std::to_string(files.size()) + " programs × 3 domains, " + std::to_string(observations) +
                   " observed states, " + std::to_string(unfinished) + " runs cut by the budget, " + std::to_string(violations) + " violations");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "sq table on the sign lattice (N=64)", 1.0, sq_table},
      {2, "multiplication BCA on constants x signs (N=64)", 5.0, times_table},
      {3, "loop invariant of the doubling loop", 1.0, loop_invariant},
      {4, "CGC to PGC and back on 500 seeds", 30.0, cgc_pgc_round_trip},
      {5, "precision order preserved by T_PGC on 200 pairs", 60.0, precision_transfer},
      {6, "soundness and completeness transfer on 300 pairs", 60.0, soundness_completeness_transfer},
      {7, "CGP/GC round trips on 200 + 200 seeds", 60.0, cgp_gc_round_trip},
      {8, "PCGC/PPGC round trips and soundness on 300 seeds", 60.0, pcgc_ppgc},
      {9, "negative fixtures and their witnesses", 5.0, negative_fixtures},
      {10, "property suites on builtins and 500 seeds", 120.0, property_suites},
      {11, "analyzer soundness against the concrete interpreter", 60.0, analyzer_soundness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail += "; exceeded the " + std::to_string(c.limit_s) + " s limit";
    }
    failed += !o.ok;
    std::printf("%s %2d  %-52s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
