#include "pcgc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace pcgc {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::FormatError, msg); }

void expect_object(const Json& j, const char* where) {
  if (!j.is_object()) bad(std::string(where) + " must be an object");
}

// Exactly the required keys plus any of the optional ones.
void expect_keys(const Json& j, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional, const char* where) {
  expect_object(j, where);
  for (const char* k : required)
    if (!j.contains(k)) bad(std::string(where) + " is missing \"" + k + "\"");
  for (const auto& [k, _] : j.items()) {
    const auto known = [&](const char* x) { return k == x; };
    if (std::none_of(required.begin(), required.end(), known) && std::none_of(optional.begin(), optional.end(), known))
      bad(std::string(where) + " has unknown key \"" + k + "\"");
  }
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> str_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, where + " entry"));
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad(where + " entries must be [lower, upper] pairs");
    out.emplace_back(str(e[0], where), str(e[1], where));
  }
  return out;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + " must be an integer");
  return j.get<std::int64_t>();
}

// --- carrier ---------------------------------------------------------------

Json carrier_to_json(const Carrier& c) {
  Json j = Json::object();
  if (c.is_integer()) {
    j["ints"] = {{"lo", c.lo()}, {"hi", c.hi()}, {"mode", std::string(to_string(c.mode()))}};
  } else {
    j["atoms"] = c.names();
  }
  return j;
}

Carrier carrier_from_json(const Json& j) {
  expect_object(j, "carrier");
  if (j.size() != 1) bad("carrier must have exactly one of \"ints\", \"atoms\"");
  if (j.contains("ints")) {
    const auto& r = j["ints"];
    expect_keys(r, {"lo", "hi", "mode"}, {}, "carrier.ints");
    const auto lo = integer(r["lo"], "carrier.ints.lo");
    const auto hi = integer(r["hi"], "carrier.ints.hi");
    if (hi < lo) bad("carrier.ints has hi < lo");
    if (hi - lo >= (std::int64_t{1} << 20)) throw Error(ErrorKind::SizeGuard, "integer carrier is too large");
    try {
      return Carrier::ints(lo, hi, parse_arith_mode(str(r["mode"], "carrier.ints.mode")));
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  if (j.contains("atoms")) {
    auto names = str_list(j["atoms"], "carrier.atoms");
    for (const auto& n : names)
      if (n.empty() || n.find_first_of(",{}") != std::string::npos)
        bad("atom names must be nonempty and free of ',', '{', '}': '" + n + "'");
    return Carrier::atoms(std::move(names));
  }
  bad("carrier must have exactly one of \"ints\", \"atoms\"");
}

Json order_to_json(const Poset& p) {
  Json pairs = Json::array();
  for (auto [a, b] : p.covers()) pairs.push_back({p.name(a), p.name(b)});
  return pairs;
}

Json abstract_to_json(const Poset& p) { return {{"elements", p.elements()}, {"leq", order_to_json(p)}}; }

Poset abstract_from_json(const Json& j) {
  expect_keys(j, {"elements", "leq"}, {}, "abstract");
  return build_poset(str_list(j["elements"], "abstract.elements"), pair_list(j["leq"], "abstract.leq"));
}

Json members_json(const std::vector<std::string>& names, const Subset& s) {
  Json out = Json::array();
  for_each_member(s, [&](std::size_t i) { out.push_back(names[i]); });
  return out;
}

Subset subset_from_list(const Carrier& c, const Json& j, const std::string& where) {
  Subset s = c.empty();
  for (const auto& n : str_list(j, where)) {
    const auto i = c.index(n);
    if (s.test(i)) bad(where + " lists '" + n + "' twice");
    s.set(i);
  }
  return s;
}

// Total map keyed by every name in `keys`, nothing else.
template <typename F>
void for_total_map(const Json& j, const std::vector<std::string>& keys, const std::string& where, F&& each) {
  expect_object(j, where.c_str());
  std::set<std::string> seen;
  for (const auto& [k, v] : j.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) bad(where + " has unknown key '" + k + "'");
    seen.insert(k);
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!seen.count(keys[i])) bad(where + " has no entry for '" + keys[i] + "'");
    each(i, j[keys[i]]);
  }
}

Kind cc_kind(std::string_view text) {
  if (text == "cgc") return Kind::cgc;
  if (text == "cgp") return Kind::cgp;
  if (text == "pcgc") return Kind::pcgc;
  bad("unknown kind '" + std::string(text) + "'");
}

const char* cc_kind_name(Kind k) {
  switch (k) {
    case Kind::cgc: return "cgc";
    case Kind::cgp: return "cgp";
    case Kind::pcgc: return "pcgc";
    default: bad("connection tagged '" + std::string(to_string(k)) + "' has no file kind");
  }
}

Json cc_to_json(const ConstructiveConnection& c) {
  const auto& A = c.carrier();
  const auto& B = c.abstract();
  Json j;
  j["kind"] = cc_kind_name(c.kind());
  j["carrier"] = carrier_to_json(A);
  if (!c.carrier_order().is_discrete()) j["carrier_order"] = order_to_json(c.carrier_order());
  j["abstract"] = abstract_to_json(B);
  Json eta = Json::object();
  for (std::size_t a = 0; a < A.size(); ++a) eta[A.name(a)] = B.name(c.eta(a));
  j["eta"] = std::move(eta);
  Json mu = Json::object();
  for (std::size_t b = 0; b < B.size(); ++b) mu[B.name(b)] = members_json(A.names(), c.mu(b));
  j["mu"] = std::move(mu);
  return j;
}

Json gc_to_json(const GaloisConnection& g) {
  const auto& A = g.carrier();
  const auto& D = g.abstract();
  Json j;
  j["kind"] = "gc";
  j["carrier"] = carrier_to_json(A);
  if (!g.carrier_order().is_discrete()) j["carrier_order"] = order_to_json(g.carrier_order());
  j["abstract"] = abstract_to_json(D.poset());
  Json alpha = Json::object();
  if (g.alpha_tabulated()) {
    for (const auto& x : enumerate_downsets(g.carrier_order())) alpha[A.format(x)] = D.name(g.alpha(x));
  } else {
    for (std::size_t a = 0; a < A.size(); ++a)
      alpha[A.format(g.carrier_order().down(a))] = D.name(g.alpha_principal(a));
  }
  j["alpha"] = std::move(alpha);
  Json gamma = Json::object();
  for (std::size_t d = 0; d < D.size(); ++d) gamma[D.name(d)] = members_json(A.names(), g.gamma(d));
  j["gamma"] = std::move(gamma);
  return j;
}

Json cco_to_json(const ClosureOp& op) {
  const auto& A = op.carrier();
  Json phi = Json::object();
  for (std::size_t a = 0; a < A.size(); ++a) phi[A.name(a)] = members_json(A.names(), op.phi(a));
  return {{"kind", "cco"}, {"carrier", carrier_to_json(A)}, {"phi", std::move(phi)}};
}

Poset carrier_order_from(const Json& j, const Carrier& A) {
  if (!j.contains("carrier_order")) return Poset::discrete(A.names());
  return build_poset(A.names(), pair_list(j["carrier_order"], "carrier_order"));
}

ConstructiveConnection cc_from_json(const Json& j) {
  expect_keys(j, {"kind", "carrier", "abstract", "eta", "mu"}, {"carrier_order"}, "domain");
  const Kind kind = cc_kind(str(j["kind"], "kind"));
  const Carrier A = carrier_from_json(j["carrier"]);
  Poset order = carrier_order_from(j, A);
  Poset B = abstract_from_json(j["abstract"]);
  IndexMap eta(A.size());
  for_total_map(j["eta"], A.names(), "eta", [&](std::size_t a, const Json& v) { eta[a] = B.index(str(v, "eta")); });
  SetMap mu(B.size());
  for_total_map(j["mu"], B.elements(), "mu",
                [&](std::size_t b, const Json& v) { mu[b] = subset_from_list(A, v, "mu"); });
  std::optional<Poset> co;
  if (j.contains("carrier_order")) co = std::move(order);
  return ConstructiveConnection(kind, A, std::move(B), std::move(eta), std::move(mu), std::move(co), {"file", ""});
}

GaloisConnection gc_from_json(const Json& j) {
  expect_keys(j, {"kind", "carrier", "abstract", "alpha", "gamma"}, {"carrier_order"}, "domain");
  const Carrier A = carrier_from_json(j["carrier"]);
  Poset order = carrier_order_from(j, A);
  Lattice D = Lattice::from_poset(abstract_from_json(j["abstract"]));
  SetMap gamma(D.size());
  for_total_map(j["gamma"], D.poset().elements(), "gamma",
                [&](std::size_t d, const Json& v) { gamma[d] = subset_from_list(A, v, "gamma"); });

  const auto& alpha = j["alpha"];
  expect_object(alpha, "alpha");
  std::unordered_map<Subset, std::size_t, SubsetHash> table;
  for (const auto& [k, v] : alpha.items()) {
    const Subset x = A.parse_subset(k);
    if (A.format(x) != k) bad("alpha key '" + k + "' is not in canonical form " + A.format(x));
    table.emplace(x, D.index(str(v, "alpha")));
  }
  // Keyed by exactly the principal downsets: atom form.
  std::set<Subset> principal;
  for (std::size_t a = 0; a < A.size(); ++a) principal.insert(order.down(a));
  const bool atom_form = table.size() == principal.size() &&
                         std::all_of(principal.begin(), principal.end(), [&](const Subset& s) { return table.count(s); });
  if (atom_form) {
    IndexMap at(A.size());
    for (std::size_t a = 0; a < A.size(); ++a) at[a] = table.at(order.down(a));
    return GaloisConnection::from_atoms(A, std::move(order), std::move(D), std::move(at), std::move(gamma), Kind::gc,
                                        {"file", ""});
  }
  try {
    return GaloisConnection::from_table(A, std::move(order), std::move(D), std::move(table), std::move(gamma),
                                        Kind::gc, {"file", ""});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ShapeMismatch) throw;
    bad("alpha must be keyed by the principal downsets or by every downset");
  }
}

ClosureOp cco_from_json(const Json& j) {
  expect_keys(j, {"kind", "carrier", "phi"}, {}, "domain");
  const Carrier A = carrier_from_json(j["carrier"]);
  SetMap phi(A.size());
  for_total_map(j["phi"], A.names(), "phi",
                [&](std::size_t a, const Json& v) { phi[a] = subset_from_list(A, v, "phi"); });
  return ClosureOp(A, std::move(phi), {"file", ""});
}

}  // namespace

Json domain_to_json(const Domain& d) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConstructiveConnection>) return cc_to_json(x);
        else if constexpr (std::is_same_v<T, GaloisConnection>) return gc_to_json(x);
        else return cco_to_json(x);
      },
      d);
}

Domain domain_from_json(const Json& j) {
  expect_object(j, "domain");
  if (!j.contains("kind")) bad("domain is missing \"kind\"");
  const auto kind = str(j["kind"], "kind");
  if (kind == "gc") return gc_from_json(j);
  if (kind == "cco") return cco_from_json(j);
  return cc_from_json(j);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path.string());
  out << text;
}

Domain read_domain(const std::filesystem::path& path) { return domain_from_json(parse_json(read_text(path))); }

void write_domain(const std::filesystem::path& path, const Domain& d) {
  write_text(path, dump_json(domain_to_json(d)));
}

const std::vector<std::string>& concrete_names(const Domain& d) {
  return std::visit([](const auto& x) -> const std::vector<std::string>& { return x.carrier().names(); }, d);
}

const std::vector<std::string>& abstract_names(const Domain& d) {
  return std::visit(
      [](const auto& x) -> const std::vector<std::string>& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConstructiveConnection>) return x.abstract().elements();
        else if constexpr (std::is_same_v<T, GaloisConnection>) return x.abstract().poset().elements();
        else return x.carrier().names();
      },
      d);
}

// --- function files --------------------------------------------------------

Json fn_to_json(const FnTable& fn, FnSide over, const std::vector<std::string>& names) {
  Json table = Json::object();
  if (fn.arity == 1) {
    for (std::size_t a = 0; a < fn.n; ++a) table[names.at(a)] = names.at(fn(a));
  } else {
    for (std::size_t a = 0; a < fn.n; ++a)
      for (std::size_t b = 0; b < fn.n; ++b) table[names.at(a) + "," + names.at(b)] = names.at(fn(a, b));
  }
  return {{"arity", fn.arity}, {"over", over == FnSide::concrete ? "concrete" : "abstract"}, {"table", std::move(table)}};
}

FnFile fn_from_json(const Json& j, const Domain& d) {
  expect_keys(j, {"arity", "over", "table"}, {}, "function");
  const auto arity = integer(j["arity"], "arity");
  if (arity != 1 && arity != 2) bad("arity must be 1 or 2");
  const auto over_text = str(j["over"], "over");
  if (over_text != "concrete" && over_text != "abstract") bad("over must be \"concrete\" or \"abstract\"");
  const FnSide over = over_text == "concrete" ? FnSide::concrete : FnSide::abstract;
  const auto& names = over == FnSide::concrete ? concrete_names(d) : abstract_names(d);
  const std::size_t n = names.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(names[i], i);
  const auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorKind::UnknownElement, "'" + s + "' is not a " + over_text + " element");
    return it->second;
  };

  const auto& table = j["table"];
  expect_object(table, "table");
  const std::size_t cells = arity == 1 ? n : n * n;
  IndexMap out(cells, 0);
  std::vector<bool> filled(cells, false);
  for (const auto& [k, v] : table.items()) {
    std::size_t cell = 0;
    if (arity == 1) {
      cell = lookup(k);
    } else {
      std::optional<std::size_t> found;
      for (auto pos = k.find(','); pos != std::string::npos; pos = k.find(',', pos + 1)) {
        auto l = index.find(k.substr(0, pos));
        auto r = index.find(k.substr(pos + 1));
        if (l == index.end() || r == index.end()) continue;
        if (found) bad("binary key '" + k + "' splits into names in more than one way");
        found = l->second * n + r->second;
      }
      if (!found) bad("binary key '" + k + "' is not \"<arg1>,<arg2>\"");
      cell = *found;
    }
    if (filled[cell]) bad("table key '" + k + "' appears twice");
    filled[cell] = true;
    out[cell] = lookup(str(v, "table value"));
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end()) bad("table is not total");
  return {over, FnTable::make(static_cast<int>(arity), n, std::move(out))};
}

FnFile read_fn(const std::filesystem::path& path, const Domain& d) {
  return fn_from_json(parse_json(read_text(path)), d);
}

void write_fn(const std::filesystem::path& path, const FnTable& fn, FnSide over, const Domain& d) {
  write_text(path, dump_json(fn_to_json(fn, over, over == FnSide::concrete ? concrete_names(d) : abstract_names(d))));
}

}  // namespace pcgc
