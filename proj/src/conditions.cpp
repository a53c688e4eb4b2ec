#include "hassett/conditions.hpp"

#include <algorithm>

#include "hassett/errors.hpp"

namespace hassett::conditions {

namespace {

using i128 = __int128;

void require_positive(std::int64_t d) {
  if (d <= 0) throw invalid_input("discriminant must be positive, got " + std::to_string(d));
}

void require_admissible(std::int64_t d) {
  require_positive(d);
  if (!is_admissible(d)) throw not_admissible(d);
}

// 2n^2 + 2n + 2 mod g, overflow-safe for any n < g < 2^63.
std::int64_t bulles_form_mod(std::int64_t n, std::int64_t g) {
  i128 v = i128(2) * n * n + 2 * n + 2;
  return static_cast<std::int64_t>(v % g);
}

}  // namespace

bool is_admissible(std::int64_t d) {
  require_positive(d);
  return d >= 8 && (d % 6 == 0 || d % 6 == 2);
}

bool has_associated_k3(std::int64_t d) {
  if (!is_admissible(d)) return false;
  if (d % 4 == 0 || d % 9 == 0) return false;
  for (const auto& [p, e] : arith::factorize(d).factors) {
    if (p % 2 == 1 && p % 3 == 2) return false;
  }
  return true;
}

std::optional<FanoCertificate> fano_hilb2(std::int64_t d) {
  require_positive(d);
  // d = 2(n^2+n+1)  <=>  2d - 3 = (2n+1)^2
  if (2 * d - 3 < 0 || !arith::is_square(2 * d - 3)) return std::nullopt;
  std::int64_t root = arith::isqrt(2 * d - 3);
  if (root % 2 == 0) return std::nullopt;
  std::int64_t n = (root - 1) / 2;
  if (n < 2) return std::nullopt;
  return FanoCertificate{n};
}

std::optional<BullesCertificate> bulles_certificate(std::int64_t d) {
  require_admissible(d);
  for (std::int64_t f = 1; f * f <= d; ++f) {
    if (d % (f * f) != 0) continue;
    std::int64_t g = d / (f * f);
    for (std::int64_t n = 0; n < g; ++n) {
      if (bulles_form_mod(n, g) == 0) return BullesCertificate{f, g, n};
    }
  }
  return std::nullopt;
}

PellSearch addington_certificate(std::int64_t d, std::int64_t a_bound) {
  require_admissible(d);
  if (a_bound < 1) throw invalid_input("a_bound must be >= 1");
  for (std::int64_t a = 1; a <= a_bound; ++a) {
    // d*a^2 = 2n^2+2n+2  <=>  2*d*a^2 - 3 = (2n+1)^2
    i128 target = i128(2) * d * a * a - 3;
    if (target > i128(9'000'000'000'000'000'000LL)) break;  // past int64 squares
    std::int64_t t = static_cast<std::int64_t>(target);
    if (!arith::is_square(t)) continue;
    std::int64_t root = arith::isqrt(t);
    if (root % 2 == 1) {
      std::int64_t n = (root - 1) / 2;
      if (n >= 1) return {PellCertificate{PellKind::addington, n, a}, a_bound};
    }
  }
  return {std::nullopt, a_bound};
}

PellSearch llsvs_certificate(std::int64_t d, std::int64_t a_bound) {
  require_admissible(d);
  if (a_bound < 1) throw invalid_input("a_bound must be >= 1");
  for (std::int64_t a = 1; a <= a_bound; ++a) {
    // d*a^2 = 6n^2+6n+2  <=>  6*d*a^2 - 3 = (6n+3)^2
    i128 target = i128(6) * d * a * a - 3;
    if (target > i128(9'000'000'000'000'000'000LL)) break;
    std::int64_t t = static_cast<std::int64_t>(target);
    if (!arith::is_square(t)) continue;
    std::int64_t root = arith::isqrt(t);
    if (root % 6 == 3) {
      std::int64_t n = (root - 3) / 6;
      if (n >= 1) return {PellCertificate{PellKind::llsvs, n, a}, a_bound};
    }
  }
  return {std::nullopt, a_bound};
}

std::optional<TailCertificate> tail_certificate(std::int64_t d) {
  require_positive(d);
  for (int offset : {0, 2}) {
    if (d < offset || (d - offset) % 6 != 0) continue;
    std::int64_t m2 = (d - offset) / 6;
    if (!arith::is_square(m2)) continue;
    std::int64_t m = arith::isqrt(m2);
    if (m < 2) continue;
    return TailCertificate{m, offset, arith::factorize(m)};
  }
  return std::nullopt;
}

bool verifies(const FanoCertificate& c, std::int64_t d) {
  return c.n >= 2 && d == 2 * (c.n * c.n + c.n + 1);
}

bool verifies(const BullesCertificate& c, std::int64_t d) {
  if (c.f < 1 || c.g < 1 || c.n < 0 || c.n >= c.g) return false;
  if (i128(c.f) * c.f * c.g != d) return false;
  return bulles_form_mod(c.n, c.g) == 0;
}

bool verifies(const PellCertificate& c, std::int64_t d) {
  if (c.n < 1 || c.a < 1) return false;
  i128 lhs = i128(d) * c.a * c.a;
  i128 rhs = c.kind == PellKind::addington ? i128(2) * c.n * c.n + 2 * c.n + 2
                                           : i128(6) * c.n * c.n + 6 * c.n + 2;
  return lhs == rhs;
}

bool verifies(const TailCertificate& c, std::int64_t d) {
  if (c.m < 2 || (c.offset != 0 && c.offset != 2)) return false;
  if (i128(6) * c.m * c.m + c.offset != d) return false;
  i128 prod = 1;
  for (const auto& [p, e] : c.m_factors.factors) {
    if (!arith::is_prime(p)) return false;
    for (int k = 0; k < e; ++k) prod *= p;
  }
  return prod == c.m;
}

DiscriminantProfile profile(std::int64_t d, std::int64_t a_bound) {
  require_positive(d);
  DiscriminantProfile p;
  p.d = d;
  p.residue_mod_6 = static_cast<int>(d % 6);
  p.admissible = is_admissible(d);
  p.has_associated_k3 = has_associated_k3(d);
  p.fano_hilb2 = fano_hilb2(d);
  p.tail = tail_certificate(d);
  p.contains_plane_divisor = (d == 8);
  p.c14_member_rational = (d == 14);
  if (p.admissible) {
    p.bulles = bulles_certificate(d);
    p.addington = addington_certificate(d, a_bound);
    p.llsvs = llsvs_certificate(d, a_bound);
  } else {
    p.addington = {std::nullopt, a_bound};
    p.llsvs = {std::nullopt, a_bound};
  }
  p.bulles_with_k3 = p.bulles.has_value() && p.has_associated_k3;

  // Re-check every certificate before handing the profile out.
  if (p.fano_hilb2 && !verifies(*p.fano_hilb2, d))
    throw error("internal", "fano certificate failed re-verification");
  if (p.bulles && !verifies(*p.bulles, d))
    throw error("internal", "bulles certificate failed re-verification");
  if (p.addington.certificate && !verifies(*p.addington.certificate, d))
    throw error("internal", "addington certificate failed re-verification");
  if (p.llsvs.certificate && !verifies(*p.llsvs.certificate, d))
    throw error("internal", "llsvs certificate failed re-verification");
  if (p.tail && !verifies(*p.tail, d))
    throw error("internal", "tail certificate failed re-verification");
  return p;
}

bool matches(const DiscriminantProfile& p, const ProfileFilter& filter) {
  if (filter.k3 && !p.has_associated_k3) return false;
  if (filter.fano && !p.fano_hilb2) return false;
  if (filter.bulles && !p.bulles) return false;
  if (filter.addington && !p.addington.certificate) return false;
  if (filter.llsvs && !p.llsvs.certificate) return false;
  if (filter.tail && !p.tail) return false;
  return true;
}

std::vector<DiscriminantProfile> enumerate_profiles(std::int64_t min,
                                                    std::int64_t max,
                                                    const ProfileFilter& filter,
                                                    std::int64_t a_bound) {
  if (min < 1 || min > max)
    throw invalid_range("need 1 <= min <= max, got [" + std::to_string(min) +
                        ", " + std::to_string(max) + "]");
  std::vector<DiscriminantProfile> out;
  for (std::int64_t d = std::max<std::int64_t>(min, 8); d <= max; ++d) {
    if (!is_admissible(d)) continue;
    auto p = profile(d, a_bound);
    if (matches(p, filter)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hassett::conditions
