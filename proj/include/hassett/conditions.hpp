#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hassett/arith.hpp"

namespace hassett::conditions {

// Witness for d = 2(n^2 + n + 1), the discriminants where the Fano variety of
// lines is isomorphic to the Hilbert square of the associated K3.
struct FanoCertificate {
  std::int64_t n = 0;

  bool operator==(const FanoCertificate&) const = default;
};

// Witness for d = f^2 * g with g | (2n^2 + 2n + 2).
struct BullesCertificate {
  std::int64_t f = 0;
  std::int64_t g = 0;
  std::int64_t n = 0;

  bool operator==(const BullesCertificate&) const = default;
};

enum class PellKind { addington, llsvs };

// Witness for d * a^2 = 2n^2+2n+2 (addington) or d * a^2 = 6n^2+6n+2 (llsvs).
struct PellCertificate {
  PellKind kind = PellKind::addington;
  std::int64_t n = 0;
  std::int64_t a = 0;

  bool operator==(const PellCertificate&) const = default;
};

// Result of a bounded Pell-type search: either a certificate or an explicit
// "nothing found with a <= a_bound". Never a definitive negative.
struct PellSearch {
  std::optional<PellCertificate> certificate;
  std::int64_t a_bound = 0;

  bool bound_exhausted() const { return !certificate.has_value(); }
  bool operator==(const PellSearch&) const = default;
};

// Witness for d = 6m^2 + offset with m >= 2 a product of primes.
struct TailCertificate {
  std::int64_t m = 0;
  int offset = 0;  // 0 or 2
  arith::PrimeFactorization m_factors;

  bool operator==(const TailCertificate&) const = default;
};

struct DiscriminantProfile {
  std::int64_t d = 0;
  int residue_mod_6 = 0;
  bool admissible = false;
  bool has_associated_k3 = false;
  std::optional<FanoCertificate> fano_hilb2;
  std::optional<BullesCertificate> bulles;
  // bulles together with an associated K3 surface; the substitution of the
  // transcendental motive only makes sense when the K3 actually exists.
  bool bulles_with_k3 = false;
  PellSearch addington;
  PellSearch llsvs;
  std::optional<TailCertificate> tail;
  bool contains_plane_divisor = false;  // d == 8
  bool c14_member_rational = false;     // d == 14

  bool operator==(const DiscriminantProfile&) const = default;
};

inline constexpr std::int64_t kDefaultABound = 100;

// d >= 8 and d = 0 or 2 mod 6; throws invalid_input for d <= 0.
bool is_admissible(std::int64_t d);

// Admissible and not divisible by 4, by 9, or by any odd prime p = 2 mod 3.
bool has_associated_k3(std::int64_t d);

std::optional<FanoCertificate> fano_hilb2(std::int64_t d);

// Complete decision: scans every square divisor f^2 of d and one full period
// of n mod g. Smallest f wins, then smallest n. Requires is_admissible(d).
std::optional<BullesCertificate> bulles_certificate(std::int64_t d);

PellSearch addington_certificate(std::int64_t d, std::int64_t a_bound);
PellSearch llsvs_certificate(std::int64_t d, std::int64_t a_bound);

std::optional<TailCertificate> tail_certificate(std::int64_t d);

// Re-verification of certificate invariants against d.
bool verifies(const FanoCertificate& c, std::int64_t d);
bool verifies(const BullesCertificate& c, std::int64_t d);
bool verifies(const PellCertificate& c, std::int64_t d);
bool verifies(const TailCertificate& c, std::int64_t d);

DiscriminantProfile profile(std::int64_t d, std::int64_t a_bound = kDefaultABound);

// Each set flag requires the corresponding certificate / predicate to hold.
struct ProfileFilter {
  bool k3 = false;
  bool fano = false;
  bool bulles = false;
  bool addington = false;
  bool llsvs = false;
  bool tail = false;
};

// Profiles for every admissible d in [min, max] matching the filter,
// ascending. Throws invalid_range unless 1 <= min <= max.
std::vector<DiscriminantProfile> enumerate_profiles(
    std::int64_t min, std::int64_t max, const ProfileFilter& filter,
    std::int64_t a_bound = kDefaultABound);

bool matches(const DiscriminantProfile& p, const ProfileFilter& filter);

}  // namespace hassett::conditions
