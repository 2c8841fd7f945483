#pragma once

#include "pcgc/functions.hpp"
#include "pcgc/galois.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcgc {

inline constexpr std::int64_t kDefaultBound = 64;

/// Built-in example domains over a bounded integer carrier.
///
///   parity           CGC   ⟨parity, [-N,N-1] modular, {even,odd}, μ⟩
///   sign_cgc         CGC   ⟨β, [-N,N], {-,0,+,⊥}, δ⟩
///   plustop_cgp      CGP   ⟨η, [-N,N], {+ ≤ ⊤}, μ⟩ (not a CGC)
///   sign_pgi         GC    the sign lattice Sign, a PGI
///   sign_minus_ppgc  GC    Sign without ≠0, a PPGC but not a PGC
///   interval_gi_d    GC    six-interval GI, neither partitioning nor disjunctive
///   interval_pcgc    PCGC  ten-interval lattice
///   interval_bprime  PCGC  candidate over B′ (fails PCGC condition (2))
///   signconst_pcgc   PCGC  constants × sign
///
/// Throws UnknownName, BoundTooSmall (interval domains need N ≥ 10).
Domain builtin(std::string_view name, std::int64_t bound = kDefaultBound);
const std::vector<std::string>& builtin_names();

ConstructiveConnection parity(std::int64_t bound = kDefaultBound);
ConstructiveConnection sign_cgc(std::int64_t bound = kDefaultBound);
ConstructiveConnection plustop_cgp(std::int64_t bound = kDefaultBound);
GaloisConnection sign_pgi(std::int64_t bound = kDefaultBound);
GaloisConnection sign_minus_ppgc(std::int64_t bound = kDefaultBound);
GaloisConnection interval_gi_d(std::int64_t bound = kDefaultBound);
ConstructiveConnection interval_pcgc(std::int64_t bound = kDefaultBound);
ConstructiveConnection interval_bprime(std::int64_t bound = kDefaultBound);
ConstructiveConnection signconst_pcgc(std::int64_t bound = kDefaultBound);

/// Integer operations by name: id, succ, pred, neg, sq (unary); add, sub, mul
/// (binary). Results are brought into the carrier by its arithmetic mode.
/// Throws UnknownName.
ConcreteFn concrete_op(std::string_view name, const Carrier& carrier);

// --- generators ------------------------------------------------------------
//
// Deterministic in the seed. Carriers are atoms "a0", "a1", ...; sizes are
// drawn up to the given maxima. Throws SizeGuard past |A| ≤ 10, |B| ≤ 12.

struct GenParams {
  std::size_t amax = 8;
  std::size_t bmax = 8;
};

/// Random partition of A, η = block id, plus up to two junk values (μ = ∅),
/// with the abstract values in shuffled declaration order.
ConstructiveConnection gen_cgc(std::uint64_t seed, GenParams params = {});
/// As gen_cgc, over a given carrier.
ConstructiveConnection gen_cgc_over(std::uint64_t seed, const Carrier& carrier, std::size_t bmax);
/// Two CGCs over one carrier; about half the time the second coarsens the first.
std::pair<ConstructiveConnection, ConstructiveConnection> gen_cgc_pair(std::uint64_t seed, GenParams params = {});
/// ℘ of the blocks of a random partition.
GaloisConnection gen_pgc(std::uint64_t seed, GenParams params = {});
/// Random partition plus a random intersection-closed family of block unions
/// containing every block and A; γ is inclusion, α the least member above.
GaloisConnection gen_ppgc(std::uint64_t seed, GenParams params = {});
/// t_pcgc of gen_ppgc.
ConstructiveConnection gen_pcgc(std::uint64_t seed, GenParams params = {});
/// GC on ℘↓(A) for a random poset of at most 6 elements, from a random Moore
/// family of downsets, with α tabulated.
GaloisConnection gen_gc(std::uint64_t seed, GenParams params = {});
/// t_cgp of gen_gc.
ConstructiveConnection gen_cgp(std::uint64_t seed, GenParams params = {});

/// Sound pair on a CGC: f maps each block into one block, f♯ is the induced
/// block map (random on junk values).
FnPair gen_sound_pair(std::uint64_t seed, const ConstructiveConnection& c);

struct PairInstance {
  ConstructiveConnection c;
  FnPair pair;
};

/// A CGC with a unary pair that is sound about two times in three; the rest
/// perturb f or f♯ at one point.
PairInstance gen_cgc_pair_instance(std::uint64_t seed, GenParams params = {});
/// A PCGC with a pair of the given arity: the BCA, sometimes relaxed upward by
/// random joins, sometimes lowered at one point.
PairInstance gen_pcgc_pair_instance(std::uint64_t seed, int arity, GenParams params = {});

}  // namespace pcgc
