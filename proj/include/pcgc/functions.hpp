#pragma once

#include "pcgc/galois.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace pcgc {

/// Total operation of arity 1 or 2 over an indexed domain of size n. Binary
/// tables are row-major: (a1, a2) lives at a1 * n + a2.
struct FnTable {
  int arity = 1;
  std::size_t n = 0;
  IndexMap table;

  /// Throws ShapeMismatch unless the table is total and closed.
  static FnTable make(int arity, std::size_t n, IndexMap table);
  static FnTable identity(std::size_t n);
  static FnTable constant(int arity, std::size_t n, std::size_t value);

  std::size_t operator()(std::size_t a) const { return table[a]; }
  std::size_t operator()(std::size_t a1, std::size_t a2) const { return table[a1 * n + a2]; }
  std::size_t apply(const std::vector<std::size_t>& args) const;

  friend bool operator==(const FnTable&, const FnTable&) = default;
};

using ConcreteFn = FnTable;
using AbstractFn = FnTable;

/// Integer operations closed into the carrier by its arithmetic mode.
ConcreteFn int_unary(const Carrier& carrier, const std::function<std::int64_t(std::int64_t)>& f);
ConcreteFn int_binary(const Carrier& carrier, const std::function<std::int64_t(std::int64_t, std::int64_t)>& f);

struct FnPair {
  ConcreteFn f;
  AbstractFn f_sharp;
};

/// Unary function on the concrete lattice of a GC (a set of carrier values,
/// downward closed when the carrier is ordered).
using LatticeFn = std::function<Subset(const Subset&)>;

/// f◇ for a unary concrete table.
LatticeFn lift(const ConcreteFn& f);

struct GcFnPair {
  LatticeFn f;
  AbstractFn f_sharp;
};

// --- GC level --------------------------------------------------------------

/// d ↦ α(f(γ(d))).
AbstractFn bca_gc(const GaloisConnection& g, const LatticeFn& f);

enum class GcProperty { sound, optimal, backward_complete, forward_complete, precise };
std::string_view to_string(GcProperty p);

/// Checks quantifying over concrete elements (backward, precise) are exhaustive
/// when there are at most 2^12 of them; beyond that they run on every
/// singleton and pair plus 4096 seeded random subsets, and the result says so.
struct PropertyCheck {
  bool ok = true;
  bool exhaustive = true;
  std::optional<Witness> witness;
  explicit operator bool() const noexcept { return ok; }
};

inline constexpr std::size_t kExhaustiveLimit = std::size_t{1} << 12;
inline constexpr std::uint64_t kSampleSeed = 0x5eed;

PropertyCheck gc_pair_property(const GaloisConnection& g, const GcFnPair& pair, GcProperty property);

// --- CGC level -------------------------------------------------------------

enum class Variant { eta_mu, mu_mu, eta_eta, mu_eta, all };
std::string_view to_string(Variant v);
/// Accepts "ημ" or "eta_mu" style names.
Variant parse_variant(std::string_view text);

/// CGC-Snd in the selected form. Variant::all evaluates the four forms and
/// throws InvariantViolated if they disagree.
PropertyCheck cgc_soundness(const ConstructiveConnection& c, const FnPair& pair, Variant variant);
/// CGC-Cmp in the selected form (Variant::all is rejected).
PropertyCheck cgc_completeness(const ConstructiveConnection& c, const FnPair& pair, Variant variant);

// --- PCGC level ------------------------------------------------------------

/// b ↦ ∨{η(f(a)) | a ∈ μ(b)}, pointwise over tuples for binary f.
AbstractFn bca_pcgc(const ConstructiveConnection& c, const ConcreteFn& f);

/// η(a) ≤ b ⇒ η(f(a)) ≤ f♯(b), and the equivalent f_C ≤ f♯; throws
/// InvariantViolated if the two forms disagree.
PropertyCheck pcgc_sound(const ConstructiveConnection& c, const FnPair& pair);

enum class PcgcProperty { optimal, backward_complete, forward_complete };
std::string_view to_string(PcgcProperty p);

PropertyCheck pcgc_pair_property(const ConstructiveConnection& c, const FnPair& pair, PcgcProperty property);

// --- partitioning GCs ------------------------------------------------------

/// ∀a ∃a'. g♯(α({a})) = α({a'}). Throws NotInClass unless g is a PGC.
PropertyCheck is_block_preserving(const GaloisConnection& g, const AbstractFn& g_sharp);

/// ⟨f◇, f♯◇⟩ on t_pgc(c). Unary only.
GcFnPair pair_to_pgc(const ConstructiveConnection& c, const FnPair& pair);

/// g♯ restricted to the blocks of t_cgc_of_pgc(g). Throws NotBlockPreserving.
AbstractFn restrict_to_blocks(const GaloisConnection& g, const AbstractFn& g_sharp);

/// ⟨g, g♯ʳ⟩ on t_cgc_of_pgc(g). Requires a PGI (NotGI), a sound lifted pair
/// (NotSound) and a block-preserving g♯ (NotBlockPreserving); the result is
/// checked against g♯ʳ(α({a})) = α({g(a)}).
FnPair pair_to_cgc(const GaloisConnection& g, const ConcreteFn& f, const AbstractFn& g_sharp);

/// μ1∘f1♯∘η1 = μ2∘f2♯∘η2 over the shared carrier. Throws NotSound unless both
/// pairs are sound.
bool pair_iso(const ConstructiveConnection& c1, const FnPair& p1, const ConstructiveConnection& c2,
              const FnPair& p2);

}  // namespace pcgc
