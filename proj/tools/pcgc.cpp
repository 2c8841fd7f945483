// Command-line front end: domain transforms, BCAs, soundness checks, the
// while-language analyzer, built-in domains and the generator fuzz loop.

#include "pcgc/analyzer.hpp"
#include "pcgc/catalog.hpp"
#include "pcgc/io.hpp"
#include "pcgc/transforms.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using namespace pcgc;

namespace {

enum Exit { ok = 0, property_failed = 1, input_error = 2, domain_error = 3 };

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text(out, text);
  }
}

const ConstructiveConnection& as_cc(const Domain& d, const char* what) {
  if (const auto* c = std::get_if<ConstructiveConnection>(&d)) return *c;
  throw Error(ErrorKind::NotInClass, std::string(what) + " expects a cgc, cgp or pcgc file");
}

const GaloisConnection& as_gc(const Domain& d, const char* what) {
  if (const auto* g = std::get_if<GaloisConnection>(&d)) return *g;
  throw Error(ErrorKind::NotInClass, std::string(what) + " expects a gc file");
}

const ClosureOp& as_cco(const Domain& d, const char* what) {
  if (const auto* c = std::get_if<ClosureOp>(&d)) return *c;
  throw Error(ErrorKind::NotInClass, std::string(what) + " expects a cco file");
}

Domain apply_transform(const std::string& name, const Domain& in) {
  static const std::map<std::string, std::function<Domain(const Domain&)>> table{
      {"cgc-pgc", [](const Domain& d) -> Domain { return t_pgc(as_cc(d, "cgc-pgc")); }},
      {"pgc-cgc", [](const Domain& d) -> Domain { return t_cgc_of_pgc(as_gc(d, "pgc-cgc")); }},
      {"cgc-cco", [](const Domain& d) -> Domain { return t_cco(as_cc(d, "cgc-cco")); }},
      {"cco-cgc", [](const Domain& d) -> Domain { return t_cgc_of_cco(as_cco(d, "cco-cgc")); }},
      {"cgp-gc", [](const Domain& d) -> Domain { return t_gc(as_cc(d, "cgp-gc")); }},
      {"gc-cgp", [](const Domain& d) -> Domain { return t_cgp(as_gc(d, "gc-cgp")); }},
      {"pcgc-ppgc", [](const Domain& d) -> Domain { return t_ppgc(as_cc(d, "pcgc-ppgc")); }},
      {"ppgc-pcgc", [](const Domain& d) -> Domain { return t_pcgc(as_gc(d, "ppgc-pcgc")); }},
      {"gc-dc", [](const Domain& d) -> Domain { return disjunctive_completion(as_gc(d, "gc-dc")); }},
  };
  auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& [k, _] : table) known += (known.empty() ? "" : ", ") + k;
    throw Error(ErrorKind::UnknownName, "unknown transform '" + name + "' (known: " + known + ")");
  }
  return it->second(in);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const std::optional<Witness>& w) {
  if (!w) return "";
  std::string out = "  witness (" + w->concrete + ", " + w->abstract + ")";
  if (!w->detail.empty()) out += ": " + w->detail;
  return out;
}

void report(const std::string& label, bool ok, const std::optional<Witness>& w, bool exhaustive, bool& all_ok) {
  std::cout << label << ": " << yes_no(ok) << (exhaustive ? "" : " (sampled)");
  if (!ok) std::cout << witness_text(w);
  std::cout << "\n";
  all_ok = all_ok && ok;
}

// --- subcommands -------------------------------------------------------------

int cmd_check(const std::string& file) {
  const Domain d = read_domain(file);
  bool all_ok = true;
  if (const auto* c = std::get_if<ConstructiveConnection>(&d)) {
    const auto cgc = check_cgc(*c);
    report("cgc", cgc.ok, cgc.witness, true, all_ok);
    const auto cgp = check_cgp(*c);
    report("cgp", cgp.ok, cgp.witness, true, all_ok);
    std::cout << "abstract lattice: " << yes_no(c->abstract_lattice() != nullptr) << "\n";
    const auto r = check_pcgc(*c);
    report("pcgc condition (1)", r.cond1, r.witness1, true, all_ok);
    report("pcgc condition (2)", r.cond2, r.witness2, true, all_ok);
    if (!r.eta_monotone) report("pcgc η monotone", false, std::nullopt, true, all_ok);
    all_ok = cgc.ok || cgp.ok || r.ok();
  } else if (const auto* g = std::get_if<GaloisConnection>(&d)) {
    const auto r = check_gc(*g);
    report("gc", r.is_gc, r.witness, true, all_ok);
    if (r.is_gc) {
      std::cout << "gi: " << yes_no(r.is_gi) << "\n";
      std::cout << "disjunctive: " << yes_no(r.is_disjunctive) << "\n";
      if (g->over_powerset()) {
        const auto p = classify_partitioning(*g);
        std::cout << "partitioning: " << to_string(p.kind) << "\n";
        std::cout << "(2') γ(x ∨ y) = A for incomparable x, y: " << yes_no(p.alt2prime) << "\n";
      }
    }
    all_ok = r.is_gc;
  } else {
    const auto r = check_cco(std::get<ClosureOp>(d));
    report("cco", r.ok, r.witness, true, all_ok);
  }
  return all_ok ? ok : property_failed;
}

int cmd_bca(const std::string& domain_file, const std::string& fn_file, const std::string& out) {
  const Domain d = read_domain(domain_file);
  const auto f = read_fn(fn_file, d);
  if (f.over != FnSide::concrete) throw Error(ErrorKind::FormatError, "bca needs a concrete function");
  AbstractFn result;
  if (const auto* c = std::get_if<ConstructiveConnection>(&d)) {
    result = bca_pcgc(*c, f.fn);
  } else if (const auto* g = std::get_if<GaloisConnection>(&d)) {
    if (f.fn.arity != 1) throw Error(ErrorKind::ShapeMismatch, "bca on a gc file takes a unary function");
    result = bca_gc(*g, lift(f.fn));
  } else {
    throw Error(ErrorKind::NotInClass, "bca needs a connection with an abstract side");
  }
  emit(dump_json(fn_to_json(result, FnSide::abstract, abstract_names(d))), out);
  return ok;
}

int cmd_soundcheck(const std::string& domain_file, const std::string& f_file, const std::string& fs_file,
                   const std::string& variant_text, bool complete) {
  const Domain d = read_domain(domain_file);
  const auto f = read_fn(f_file, d);
  const auto fs = read_fn(fs_file, d);
  if (f.over != FnSide::concrete || fs.over != FnSide::abstract)
    throw Error(ErrorKind::FormatError, "soundcheck takes a concrete function and then an abstract one");
  bool all_ok = true;
  const FnPair pair{f.fn, fs.fn};

  if (const auto* g = std::get_if<GaloisConnection>(&d)) {
    if (f.fn.arity != 1) throw Error(ErrorKind::ShapeMismatch, "gc-level checks take unary functions");
    const GcFnPair gp{lift(f.fn), fs.fn};
    std::vector<GcProperty> props{GcProperty::sound};
    if (complete)
      props.insert(props.end(), {GcProperty::optimal, GcProperty::backward_complete, GcProperty::forward_complete,
                                 GcProperty::precise});
    for (auto p : props) {
      const auto r = gc_pair_property(*g, gp, p);
      report(std::string(to_string(p)), r.ok, r.witness, r.exhaustive, all_ok);
    }
    return all_ok ? ok : property_failed;
  }

  const auto& c = as_cc(d, "soundcheck");
  if (check_cgc(c).ok) {
    const Variant v = parse_variant(variant_text);
    const auto s = cgc_soundness(c, pair, v);
    report("sound [" + std::string(to_string(v)) + "]", s.ok, s.witness, s.exhaustive, all_ok);
    if (complete) {
      std::vector<Variant> vs{v};
      if (v == Variant::all) vs = {Variant::eta_mu, Variant::mu_mu, Variant::eta_eta, Variant::mu_eta};
      for (auto x : vs) {
        const auto r = cgc_completeness(c, pair, x);
        report("complete [" + std::string(to_string(x)) + "]", r.ok, r.witness, r.exhaustive, all_ok);
      }
    }
  } else {
    const auto s = pcgc_sound(c, pair);
    report("sound", s.ok, s.witness, s.exhaustive, all_ok);
    if (complete)
      for (auto p : {PcgcProperty::optimal, PcgcProperty::backward_complete, PcgcProperty::forward_complete}) {
        const auto r = pcgc_pair_property(c, pair, p);
        report(std::string(to_string(p)), r.ok, r.witness, r.exhaustive, all_ok);
      }
  }
  return all_ok ? ok : property_failed;
}

int cmd_analyze(const std::string& file, const std::string& domain, std::int64_t bound, const std::string& format,
                bool verify) {
  const Program p = parse_program(read_text(file));
  const Analyzer a = Analyzer::for_domain(builtin(domain, bound));
  const auto r = a.run(p);
  std::cout << (format == "json" ? format_json(a, r) : format_text(a, r));
  if (!verify) return ok;
  const auto run = run_concrete(p, a.domain().carrier());
  const auto bad = soundness_violations(a, r, run);
  std::cerr << "concrete run: " << run.steps << " steps" << (run.finished ? "" : " (budget exhausted)") << ", "
            << bad.size() << " violations\n";
  for (const auto& v : bad)
    std::cerr << "  L" << v.label << ": " << v.var << " = " << v.value << " not in " << v.abstract << "\n";
  return bad.empty() ? ok : property_failed;
}

int cmd_builtin(const std::string& name, std::int64_t bound, const std::string& out, bool list) {
  if (list) {
    for (const auto& n : builtin_names()) std::cout << n << "\n";
    return ok;
  }
  emit(dump_json(domain_to_json(builtin(name, bound))), out);
  return ok;
}

// One generate-check-transform-roundtrip cycle; returns an error message or "".
std::string fuzz_case(const std::string& kind, std::uint64_t seed, GenParams params) {
  const auto same_cc = [](const ConstructiveConnection& a, const ConstructiveConnection& b) {
    return a.eta_table() == b.eta_table() && a.mu_table() == b.mu_table() && a.abstract() == b.abstract();
  };
  if (kind == "cgc") {
    const auto c = gen_cgc(seed, params);
    if (!check_cgc(c)) return "generated CGC fails the checker";
    const auto g = t_pgc(c);
    if (classify_partitioning(g).kind != Partitioning::pgc) return "t_pgc output is not a PGC";
    if (!nonempty_iso(t_cgc_of_pgc(g), c)) return "t_cgc ∘ t_pgc is not isomorphic to the input";
    if (!nonempty_iso(t_cgc_of_cco(t_cco(c)), c)) return "t_cgc ∘ t_cco is not isomorphic to the input";
  } else if (kind == "pgc") {
    const auto g = gen_pgc(seed, params);
    if (classify_partitioning(g).kind != Partitioning::pgc) return "generated PGC is not a PGC";
    if (precision_cmp(t_pgc(t_cgc_of_pgc(g)), g) != Precision::isomorphic)
      return "t_pgc ∘ t_cgc is not isomorphic to the input";
  } else if (kind == "ppgc") {
    const auto g = gen_ppgc(seed, params);
    if (classify_partitioning(g).kind == Partitioning::neither) return "generated PPGC is not partitioning";
    if (precision_cmp(t_ppgc(t_pcgc(g)), g) != Precision::isomorphic)
      return "t_ppgc ∘ t_pcgc is not isomorphic to the input";
  } else if (kind == "pcgc") {
    const auto c = gen_pcgc(seed, params);
    if (!check_pcgc(c).ok()) return "generated PCGC fails the checker";
    if (!same_cc(t_pcgc(t_ppgc(c)), c)) return "t_pcgc ∘ t_ppgc is not the identity";
  } else if (kind == "gc") {
    const auto g = gen_gc(seed, params);
    if (!check_gc(g).is_gc) return "generated GC fails the checker";
    const auto back = t_gc(t_cgp(g));
    for (const auto& x : g.concrete_elements())
      if (back.alpha(x) != g.alpha(x)) return "t_gc ∘ t_cgp changes α at " + g.carrier().format(x);
    if (back.gamma_table() != g.gamma_table()) return "t_gc ∘ t_cgp changes γ";
  } else if (kind == "cgp") {
    const auto c = gen_cgp(seed, params);
    if (!check_cgp(c)) return "generated CGP fails the checker";
    if (!same_cc(t_cgp(t_gc(c)), c)) return "t_cgp ∘ t_gc is not the identity";
  } else if (kind == "sound_pair") {
    const auto c = gen_cgc(seed, params);
    if (!cgc_soundness(c, gen_sound_pair(seed, c), Variant::all)) return "generated pair is not sound";
  } else {
    throw Error(ErrorKind::UnknownName, "unknown fuzz kind '" + kind + "'");
  }
  return "";
}

int cmd_fuzz(const std::string& kind, std::size_t cases, std::uint64_t seed, GenParams params) {
  std::size_t passed = 0, failed = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    std::string err;
    try {
      err = fuzz_case(kind, seed + i, params);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnknownName || e.kind() == ErrorKind::SizeGuard) throw;
      err = e.what();
    }
    if (err.empty()) {
      ++passed;
    } else {
      ++failed;
      std::cout << "seed " << seed + i << ": " << err << "\n";
    }
  }
  std::cout << kind << ": " << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? ok : property_failed;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UseBeforeAssign:
    case ErrorKind::FormatError: return input_error;
    default: return domain_error;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Galois connections and their constructive presentations"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, file2, file3, out, name, variant = "all", format = "text", domain = "signconst_pcgc";
  std::int64_t bound = kDefaultBound;
  bool complete = false, list = false, verify = false;
  std::size_t cases = 100;
  std::uint64_t seed = 1;
  GenParams params;

  auto* check = app.add_subcommand("check", "Run every class checker on a domain file");
  check->add_option("domain", file, "Domain file")->required();
  check->callback([&] { action = [&] { return cmd_check(file); }; });

  auto* transform = app.add_subcommand("transform", "Apply a transform: cgc-pgc, pgc-cgc, cgc-cco, cco-cgc, "
                                                    "cgp-gc, gc-cgp, pcgc-ppgc, ppgc-pcgc, gc-dc");
  transform->add_option("transform", name, "<from>-<to>")->required();
  transform->add_option("domain", file, "Input domain file")->required();
  transform->add_option("-o,--output", out, "Output file (default stdout)");
  transform->callback([&] {
    action = [&] {
      emit(dump_json(domain_to_json(apply_transform(name, read_domain(file)))), out);
      return static_cast<int>(ok);
    };
  });

  auto* bca = app.add_subcommand("bca", "Best correct approximation of a concrete function");
  bca->add_option("domain", file, "Domain file")->required();
  bca->add_option("function", file2, "Concrete function file")->required();
  bca->add_option("-o,--output", out, "Output file (default stdout)");
  bca->callback([&] { action = [&] { return cmd_bca(file, file2, out); }; });

  auto* sound = app.add_subcommand("soundcheck", "Soundness (and completeness) of a function pair");
  sound->add_option("domain", file, "Domain file")->required();
  sound->add_option("concrete", file2, "Concrete function file")->required();
  sound->add_option("abstract", file3, "Abstract function file")->required();
  sound->add_option("--variant", variant, "ημ, μμ, ηη, μη or all (also eta_mu, ...)");
  sound->add_flag("--complete", complete, "Also check the completeness properties");
  sound->callback([&] { action = [&] { return cmd_soundcheck(file, file2, file3, variant, complete); }; });

  auto* analyze = app.add_subcommand("analyze", "Analyze a while program");
  analyze->add_option("program", file, "Program file")->required();
  analyze->add_option("--domain", domain, "Built-in domain name");
  analyze->add_option("--bound", bound, "Carrier bound N");
  analyze->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--verify", verify, "Also run the concrete interpreter and compare");
  analyze->callback([&] { action = [&] { return cmd_analyze(file, domain, bound, format, verify); }; });

  auto* fuzz = app.add_subcommand("fuzz", "Generate-check-roundtrip cycles");
  fuzz->add_option("kind", name, "cgc, pgc, ppgc, pcgc, gc, cgp or sound_pair")->required();
  fuzz->add_option("--cases", cases, "Number of cases");
  fuzz->add_option("--seed", seed, "First seed");
  fuzz->add_option("--amax", params.amax, "Largest carrier");
  fuzz->add_option("--bmax", params.bmax, "Largest abstract domain");
  fuzz->callback([&] { action = [&] { return cmd_fuzz(name, cases, seed, params); }; });

  auto* bi = app.add_subcommand("builtin", "Write a built-in domain file");
  bi->add_option("name", name, "Built-in name");
  bi->add_option("--bound", bound, "Carrier bound N");
  bi->add_option("--emit", out, "Output file (default stdout)");
  bi->add_flag("--list", list, "List the built-in names");
  bi->callback([&] {
    action = [&] {
      if (!list && name.empty()) throw CLI::RequiredError("name");
      return cmd_builtin(name, bound, out, list);
    };
  });

  try {
    app.parse(argc, argv);
    return action();
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return domain_error;
  }
}
