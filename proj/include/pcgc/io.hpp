#pragma once

#include "pcgc/functions.hpp"
#include "pcgc/galois.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace pcgc {

using Json = nlohmann::ordered_json;

// Domain files:
//
//   {"kind": "cgc" | "cgp" | "pcgc" | "gc" | "cco",
//    "carrier": {"ints": {"lo": -8, "hi": 8, "mode": "saturating"}} | {"atoms": [...]},
//    "carrier_order": [["a","b"], ...],          optional, absent = discrete
//    "abstract": {"elements": [...], "leq": [["x","y"], ...]},
//    "eta": {"<concrete>": "<abstract>"}, "mu": {"<abstract>": ["<concrete>", ...]}}
//
// Kind "gc" carries "alpha" and "gamma" instead of "eta" and "mu". "alpha" is
// keyed by canonical subset strings "{a,b}": keyed by the principal downsets
// only, it is extended by joins; keyed by every downset, it is a full table.
// Kind "cco" has only "carrier" and "phi": {"<concrete>": ["<concrete>", ...]}.
// Unknown or missing keys are FormatErrors.

Json domain_to_json(const Domain& d);
Domain domain_from_json(const Json& j);

/// Parses JSON text; syntax errors become FormatError.
Json parse_json(const std::string& text);
/// Two-space indented, trailing newline.
std::string dump_json(const Json& j);

Domain read_domain(const std::filesystem::path& path);
void write_domain(const std::filesystem::path& path, const Domain& d);

/// Names of the concrete values and of the abstract elements (for a
/// closure operator: the carrier again).
const std::vector<std::string>& concrete_names(const Domain& d);
const std::vector<std::string>& abstract_names(const Domain& d);

// Function files:
//
//   {"arity": 1 | 2, "over": "concrete" | "abstract",
//    "table": {"<arg>": "<result>"} or {"<arg1>,<arg2>": "<result>"}}
//
// Element names may contain commas; a binary key is split at the one comma
// where both halves are names.

enum class FnSide { concrete, abstract };

struct FnFile {
  FnSide over = FnSide::concrete;
  FnTable fn;
};

Json fn_to_json(const FnTable& fn, FnSide over, const std::vector<std::string>& names);
FnFile fn_from_json(const Json& j, const Domain& d);
FnFile read_fn(const std::filesystem::path& path, const Domain& d);
void write_fn(const std::filesystem::path& path, const FnTable& fn, FnSide over, const Domain& d);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace pcgc
