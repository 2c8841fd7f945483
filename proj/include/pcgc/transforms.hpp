#pragma once

#include "pcgc/galois.hpp"

namespace pcgc {

// Every transform checks that its input belongs to the source class (throwing
// NotInClass otherwise) and re-runs the target checker on its output,
// throwing InvariantViolated if that ever fails.

/// Largest abstract carrier t_pgc will lift to a powerset.
inline constexpr std::size_t kMaxPowersetBase = 12;

/// CGC → PGC: ⟨η◇, ℘(A), ℘(B), μ*⟩. Throws SizeGuard past kMaxPowersetBase.
GaloisConnection t_pgc(const ConstructiveConnection& c);
/// PGC → CGC: ⟨a ↦ α({a}), A, {α({a})}, γ⟩.
ConstructiveConnection t_cgc_of_pgc(const GaloisConnection& g);

/// CGC → CCO: μ∘η.
ClosureOp t_cco(const ConstructiveConnection& c);
/// CCO → CGC: ⟨φ, A, {φ(a)}, id⟩, blocks named "[least member]".
ConstructiveConnection t_cgc_of_cco(const ClosureOp& phi);

/// CGP over a complete lattice → GC on ℘↓(A): ⟨η∨, ℘↓(A), B, μ⟩.
GaloisConnection t_gc(const ConstructiveConnection& c);
/// GC on ℘↓(A) → CGP: ⟨a ↦ α(↓a), A, D, γ⟩.
ConstructiveConnection t_cgp(const GaloisConnection& g);

/// PCGC over a complete lattice → PPGC: ⟨η∨, ℘(A), B, μ⟩.
GaloisConnection t_ppgc(const ConstructiveConnection& c);
/// PPGC (or PGC) → PCGC: ⟨a ↦ α({a}), A, D, γ⟩.
ConstructiveConnection t_pcgc(const GaloisConnection& g);

/// Meet-closure of the join-irreducibles of a PGC whose abstract lattice is
/// Boolean (as produced by t_pgc).
Subset least_disjunctive_basis(const GaloisConnection& g);

/// PPGC → PGC whose abstract elements are all unions of the blocks of prt(g).
/// Unions already represented in g keep their names; the others are named
/// by joining block names with "∨".
GaloisConnection disjunctive_completion(const GaloisConnection& g);

}  // namespace pcgc
