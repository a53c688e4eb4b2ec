#pragma once

#include <cstdint>
#include <vector>

#include "hassett/trace.hpp"

namespace hassett::family {

// Number of distinct labelling discriminants a witness must carry; the
// simultaneous Gram matrix then has rank kLabellingCount + 1 = 20.
inline constexpr int kLabellingCount = 19;

// Arithmetic package certifying that a one-dimensional family with the
// desired motive sits inside the divisor of discriminant target_d: the
// target, a K3-linked discriminant, and tail discriminants of shape
// 6m^2 or 6m^2+2.
struct FamilyWitness {
  std::int64_t target_d = 0;
  std::int64_t k3_disc = 0;
  std::vector<std::int64_t> tail_discs;
  std::vector<std::int64_t> all_discs;  // sorted dedup union of the above

  bool operator==(const FamilyWitness&) const = default;
};

// Assembles a witness with all_discs derived from the other fields.
FamilyWitness make_witness(std::int64_t target_d, std::int64_t k3_disc,
                           std::vector<std::int64_t> tail_discs);

// Deterministic builder: smallest tails first (24, 26, 54, 56, ...), skipping
// collisions with target_d and k3_disc, until exactly kLabellingCount
// distinct discriminants exist. Throws not_admissible or invalid_k3_disc.
FamilyWitness build_witness(std::int64_t d, std::int64_t k3_disc = 14);

// The dual construction through 182, which carries both the Hilbert-square
// and the LLSvS certificates.
FamilyWitness build_witness_both(std::int64_t d);

// Re-checks every witness invariant from scratch and returns the gate-by-gate
// trace; throws witness_invalid naming the first violated gate.
trace::DerivationTrace verify_witness(const FamilyWitness& w);

}  // namespace hassett::family
