#pragma once

#include "pcgc/order.hpp"
#include "pcgc/setops.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace pcgc {

/// Class tag of a connection. Tags are advisory: membership is always decided
/// by the checkers below.
enum class Kind { gc, cgc, cgp, pcgc, cco, pgc, ppgc, derived };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view text);

/// Where a connection came from (source class and the transform applied).
struct Provenance {
  std::string source;
  std::string transform;
};

/// A counterexample found by a checker, rendered with element names.
struct Witness {
  std::string concrete;
  std::string abstract;
  std::string detail;
};

struct Check {
  bool ok = true;
  std::optional<Witness> witness;

  static Check pass() { return {}; }
  static Check fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return ok; }
};

/// ⟨η, A, B, μ⟩ in any of the constructive presentations (CGC, CGP, PCGC).
///
/// For a CGC the abstract poset is discrete. The carrier order is discrete
/// unless the connection is a CGP over an ordered carrier.
class ConstructiveConnection {
 public:
  /// Throws ShapeMismatch when the tables are not total or out of range.
  ConstructiveConnection(Kind kind, Carrier carrier, Poset abstract, IndexMap eta, SetMap mu,
                         std::optional<Poset> carrier_order = std::nullopt, Provenance provenance = {});

  Kind kind() const noexcept { return kind_; }
  const Carrier& carrier() const noexcept { return carrier_; }
  const Poset& carrier_order() const noexcept { return carrier_order_; }
  const Poset& abstract() const noexcept { return abstract_; }
  /// nullptr when the abstract poset is not a complete lattice.
  const Lattice* abstract_lattice() const noexcept { return lattice_ ? &*lattice_ : nullptr; }
  /// Throws NotCompleteLattice.
  const Lattice& require_lattice() const;

  std::size_t eta(std::size_t a) const { return eta_.at(a); }
  const Subset& mu(std::size_t b) const { return mu_.at(b); }
  const IndexMap& eta_table() const noexcept { return eta_; }
  const SetMap& mu_table() const noexcept { return mu_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  /// η(A) as a subset of the abstract elements.
  Subset eta_image() const;

  ConstructiveConnection with_kind(Kind kind, Provenance provenance) const;
  ConstructiveConnection with_abstract_order(Poset abstract, Kind kind, Provenance provenance) const;
  ConstructiveConnection with_carrier_order(Poset carrier_order, Kind kind, Provenance provenance) const;

 private:
  Kind kind_;
  Carrier carrier_;
  Poset carrier_order_;
  Poset abstract_;
  std::optional<Lattice> lattice_;
  IndexMap eta_;
  SetMap mu_;
  Provenance provenance_;
};

/// ⟨α, C, D, γ⟩ with C the powerset ℘(A) (discrete carrier order) or the
/// downward powerdomain ℘↓(A) of an ordered carrier, and D a finite lattice.
///
/// α is held either on principal downsets, α(↓a), and extended by joins
/// (the left adjoint of any GC preserves joins, so no GC is lost this way),
/// or as an explicit table over every concrete element. The tabulated form
/// exists for connections read from files, where α may be anything and the
/// checker has to find out.
class GaloisConnection {
 public:
  static GaloisConnection from_atoms(Carrier carrier, Poset carrier_order, Lattice abstract,
                                     IndexMap alpha_principal, SetMap gamma, Kind kind = Kind::gc,
                                     Provenance provenance = {});
  /// Throws ShapeMismatch unless the table covers exactly the downsets.
  static GaloisConnection from_table(Carrier carrier, Poset carrier_order, Lattice abstract,
                                     std::unordered_map<Subset, std::size_t, SubsetHash> alpha, SetMap gamma,
                                     Kind kind = Kind::gc, Provenance provenance = {});

  Kind kind() const noexcept { return kind_; }
  const Carrier& carrier() const noexcept { return carrier_; }
  const Poset& carrier_order() const noexcept { return carrier_order_; }
  bool over_powerset() const { return carrier_order_.is_discrete(); }
  const Lattice& abstract() const noexcept { return abstract_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  /// α(X) for a concrete element X (a downset). Throws ShapeMismatch.
  std::size_t alpha(const Subset& x) const;
  /// α(↓a).
  std::size_t alpha_principal(std::size_t a) const;
  const Subset& gamma(std::size_t d) const { return gamma_.at(d); }
  const SetMap& gamma_table() const noexcept { return gamma_; }

  bool alpha_tabulated() const noexcept { return tabulated_; }
  const std::unordered_map<Subset, std::size_t, SubsetHash>& alpha_table() const noexcept { return table_; }

  /// Every element of the concrete lattice (guarded by kMaxDownsets).
  std::vector<Subset> concrete_elements() const;

  GaloisConnection with_kind(Kind kind, Provenance provenance) const;

 private:
  GaloisConnection() = default;

  Kind kind_ = Kind::gc;
  Carrier carrier_;
  Poset carrier_order_;
  Lattice abstract_;
  IndexMap principal_;  // α(↓a), always populated
  bool tabulated_ = false;
  std::unordered_map<Subset, std::size_t, SubsetHash> table_;
  SetMap gamma_;
  Provenance provenance_;
};

/// φ: A → ℘(A).
class ClosureOp {
 public:
  ClosureOp(Carrier carrier, SetMap phi, Provenance provenance = {});

  const Carrier& carrier() const noexcept { return carrier_; }
  const Subset& phi(std::size_t a) const { return phi_.at(a); }
  const SetMap& phi_table() const noexcept { return phi_; }
  const Provenance& provenance() const noexcept { return provenance_; }

 private:
  Carrier carrier_;
  SetMap phi_;
  Provenance provenance_;
};

// --- class checkers --------------------------------------------------------
//
// Counterexamples are searched abstract value first (declaration order), then
// concrete value in the carrier's search order.

struct GcReport {
  bool is_gc = false;
  bool is_gi = false;
  bool is_disjunctive = false;
  std::optional<Witness> witness;
};

GcReport check_gc(const GaloisConnection& g);

/// x ∈ μ(y) ⇔ η(x) = y.
Check check_cgc(const ConstructiveConnection& c);
bool cgc_corr_holds_at(const ConstructiveConnection& c, std::size_t x, std::size_t y);

/// η, μ monotone, μ lands in downsets, and x ∈ μ(y) ⇔ η(x) ≤ y.
Check check_cgp(const ConstructiveConnection& c);

struct PcgcReport {
  bool cond1 = false;  // x ∈ μ(η(x')) ⇔ η(x) = η(x')
  bool cond2 = false;  // x ∈ μ(y) ⇔ η(x) ≤ y
  bool eta_monotone = true;
  std::optional<Witness> witness1;
  std::optional<Witness> witness2;

  bool ok() const noexcept { return cond1 && cond2 && eta_monotone; }
  explicit operator bool() const noexcept { return ok(); }
};

PcgcReport check_pcgc(const ConstructiveConnection& c);

/// x ∈ φ(y) ⇔ φ(x) = φ(y).
Check check_cco(const ClosureOp& phi);

/// {γ(α({a}))}_{a ∈ A} without repeats, in order of first occurrence.
std::vector<Subset> prt(const GaloisConnection& g);

enum class Partitioning { pgc, ppgc, neither };
std::string_view to_string(Partitioning p);

struct PartitioningReport {
  Partitioning kind = Partitioning::neither;
  PartitionCheck partition;
  bool additive = false;
  /// γ(x ∨ y) = A for all incomparable x, y. Reported only; no relationship
  /// to additivity is assumed.
  bool alt2prime = false;
};

PartitioningReport classify_partitioning(const GaloisConnection& g);

// --- precision -------------------------------------------------------------

enum class Precision { strictly_finer, strictly_coarser, isomorphic, incomparable };
std::string_view to_string(Precision p);

/// γ(α(C)) as a sorted list of distinct subsets of A.
std::vector<Subset> concretization_image(const GaloisConnection& g);
/// μ(B) as a sorted list of distinct subsets of A.
std::vector<Subset> concretization_image(const ConstructiveConnection& c);

/// How the first abstraction relates to the second: strictly_finer means
/// image(second) ⊊ image(first).
Precision compare_images(const std::vector<Subset>& first, const std::vector<Subset>& second);
Precision precision_cmp(const GaloisConnection& a, const GaloisConnection& b);

/// Every nonempty μ2(b) is a union of sets in μ1(B1): the partition of the
/// first refines the partition of the second. Empty concretizations are
/// ignored, so "isomorphic" here coincides with nonempty_iso.
bool cgc_refines(const ConstructiveConnection& a, const ConstructiveConnection& b);
Precision precision_cmp(const ConstructiveConnection& a, const ConstructiveConnection& b);

/// μ1(B1) ∪ {∅} = μ2(B2) ∪ {∅}.
bool nonempty_iso(const ConstructiveConnection& a, const ConstructiveConnection& b);

/// Mutually inverse renamings between η1(A) and η2(A).
struct Renaming {
  std::map<std::size_t, std::size_t> forward;   // f12: η1(A) → η2(A)
  std::map<std::size_t, std::size_t> backward;  // f21: η2(A) → η1(A)
};

/// Builds f12 by picking, for each a, some x with μ1(η1(a)) = μ2(η2(x)).
/// Throws NotIsomorphic when the images differ beyond the empty set.
Renaming renaming_witnesses(const ConstructiveConnection& a, const ConstructiveConnection& b);
/// f12∘f21 = id = f21∘f12, μ1∘η1 = μ2∘f12∘η1, μ2∘η2 = μ1∘f21∘η2.
bool verify_renaming(const ConstructiveConnection& a, const ConstructiveConnection& b, const Renaming& r);

/// η surjective. Precondition: `c` is a CGC.
bool is_cgi(const ConstructiveConnection& c);

/// Throws NotInClass when the input fails its checker.
ConstructiveConnection embed_cgc_to_pcgc(const ConstructiveConnection& c);
ConstructiveConnection embed_pcgc_to_cgp(const ConstructiveConnection& c);

/// Any connection the tools can read, write, or build.
using Domain = std::variant<ConstructiveConnection, GaloisConnection, ClosureOp>;

}  // namespace pcgc
