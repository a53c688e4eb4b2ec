#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <optional>

#include "hassett/conditions.hpp"
#include "hassett/errors.hpp"

using namespace hassett;
using namespace hassett::conditions;

namespace {

// Brute-force oracles, independent of the implementation path.

bool oracle_admissible(std::int64_t d) {
  return d >= 8 && (d % 6 == 0 || d % 6 == 2);
}

bool oracle_k3(std::int64_t d) {
  if (!oracle_admissible(d)) return false;
  if (d % 4 == 0 || d % 9 == 0) return false;
  for (std::int64_t p = 3; p <= d; p += 2) {
    bool prime = true;
    for (std::int64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) { prime = false; break; }
    if (prime && p % 3 == 2 && d % p == 0) return false;
  }
  return true;
}

// Triple scan over square divisors and one full period in n.
std::optional<BullesCertificate> oracle_bulles(std::int64_t d) {
  for (std::int64_t f = 1; f * f <= d; ++f) {
    if (d % (f * f) != 0) continue;
    std::int64_t g = d / (f * f);
    for (std::int64_t n = 0; n < g; ++n) {
      if ((2 * n * n + 2 * n + 2) % g == 0) return BullesCertificate{f, g, n};
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("is_admissible examples") {
  CHECK(is_admissible(14));
  CHECK_FALSE(is_admissible(6));   // fails d >= 8
  CHECK_FALSE(is_admissible(10));  // 10 mod 6 = 4
  CHECK(is_admissible(8));
  CHECK(is_admissible(12));
  CHECK_THROWS_AS(is_admissible(0), invalid_input);
  CHECK_THROWS_AS(is_admissible(-6), invalid_input);
}

TEST_CASE("has_associated_k3 examples") {
  CHECK(has_associated_k3(14));
  CHECK_FALSE(has_associated_k3(8));   // 4 | 8
  CHECK_FALSE(has_associated_k3(30));  // 5 | 30, 5 = 2 mod 3
  CHECK_FALSE(has_associated_k3(18));  // 9 | 18
  CHECK(has_associated_k3(26));
}

TEST_CASE("fano_hilb2 examples") {
  REQUIRE(fano_hilb2(14).has_value());
  CHECK(fano_hilb2(14)->n == 2);
  REQUIRE(fano_hilb2(26).has_value());
  CHECK(fano_hilb2(26)->n == 3);
  CHECK_FALSE(fano_hilb2(24).has_value());
  CHECK_FALSE(fano_hilb2(6).has_value());  // would need n = 1 < 2
  CHECK_THROWS_AS(fano_hilb2(0), invalid_input);
}

TEST_CASE("bulles_certificate examples") {
  auto c14 = bulles_certificate(14);
  REQUIRE(c14.has_value());
  CHECK(*c14 == BullesCertificate{1, 14, 2});

  auto c182 = bulles_certificate(182);
  REQUIRE(c182.has_value());
  CHECK(*c182 == BullesCertificate{1, 182, 9});

  CHECK_THROWS_AS(bulles_certificate(10), not_admissible);
}

TEST_CASE("bulles f=1 along d = 2(k^2+k+1), k = 1..20") {
  for (std::int64_t k = 1; k <= 20; ++k) {
    std::int64_t d = 2 * (k * k + k + 1);
    if (!is_admissible(d)) continue;  // k = 1 gives d = 6
    auto cert = bulles_certificate(d);
    REQUIRE(cert.has_value());
    CHECK(cert->f == 1);
    CHECK(verifies(*cert, d));
  }
}

TEST_CASE("addington_certificate examples") {
  auto r14 = addington_certificate(14, 10);
  REQUIRE(r14.certificate.has_value());
  CHECK(*r14.certificate == PellCertificate{PellKind::addington, 2, 1});

  auto r42 = addington_certificate(42, 10);
  REQUIRE(r42.certificate.has_value());
  CHECK(*r42.certificate == PellCertificate{PellKind::addington, 4, 1});

  auto r24 = addington_certificate(24, 10);
  CHECK(r24.bound_exhausted());
  CHECK(r24.a_bound == 10);

  CHECK_THROWS_AS(addington_certificate(10, 10), not_admissible);
  CHECK_THROWS_AS(addington_certificate(14, 0), invalid_input);
}

TEST_CASE("llsvs_certificate examples") {
  auto r14 = llsvs_certificate(14, 10);
  REQUIRE(r14.certificate.has_value());
  CHECK(*r14.certificate == PellCertificate{PellKind::llsvs, 1, 1});

  auto r182 = llsvs_certificate(182, 10);
  REQUIRE(r182.certificate.has_value());
  CHECK(*r182.certificate == PellCertificate{PellKind::llsvs, 5, 1});

  CHECK(llsvs_certificate(26, 10).bound_exhausted());
}

TEST_CASE("tail_certificate examples") {
  auto c24 = tail_certificate(24);
  REQUIRE(c24.has_value());
  CHECK(c24->m == 2);
  CHECK(c24->offset == 0);

  auto c26 = tail_certificate(26);
  REQUIRE(c26.has_value());
  CHECK(c26->m == 2);
  CHECK(c26->offset == 2);

  CHECK_FALSE(tail_certificate(14).has_value());
  CHECK_FALSE(tail_certificate(6).has_value());   // m = 1 excluded
  CHECK_FALSE(tail_certificate(8).has_value());
  CHECK_THROWS_AS(tail_certificate(0), invalid_input);
}

TEST_CASE("profile of 14") {
  auto p = profile(14, 10);
  CHECK(p.admissible);
  CHECK(p.has_associated_k3);
  REQUIRE(p.fano_hilb2.has_value());
  CHECK(p.fano_hilb2->n == 2);
  REQUIRE(p.bulles.has_value());
  CHECK(*p.bulles == BullesCertificate{1, 14, 2});
  CHECK(p.bulles_with_k3);
  REQUIRE(p.addington.certificate.has_value());
  CHECK(p.addington.certificate->n == 2);
  REQUIRE(p.llsvs.certificate.has_value());
  CHECK(p.llsvs.certificate->n == 1);
  CHECK_FALSE(p.tail.has_value());
  CHECK_FALSE(p.contains_plane_divisor);
  CHECK(p.c14_member_rational);
}

TEST_CASE("profile of 8") {
  auto p = profile(8, 10);
  CHECK(p.admissible);
  CHECK_FALSE(p.has_associated_k3);
  CHECK(p.contains_plane_divisor);
  CHECK_FALSE(p.fano_hilb2.has_value());
  CHECK(p.addington.bound_exhausted());
  CHECK(p.llsvs.bound_exhausted());
  CHECK_FALSE(p.tail.has_value());
  // (***) as literally stated formally holds for d = 8 via f = 2, g = 2,
  // n = 0; the guarded flag stays off because 8 has no associated K3.
  REQUIRE(p.bulles.has_value());
  CHECK(*p.bulles == BullesCertificate{2, 2, 0});
  CHECK_FALSE(p.bulles_with_k3);
}

TEST_CASE("profile of non-admissible 7") {
  auto p = profile(7, 10);
  CHECK_FALSE(p.admissible);
  CHECK_FALSE(p.has_associated_k3);
  CHECK_FALSE(p.fano_hilb2.has_value());
  CHECK_FALSE(p.bulles.has_value());
  CHECK(p.addington.bound_exhausted());
  CHECK(p.llsvs.bound_exhausted());
  CHECK_FALSE(p.tail.has_value());
  CHECK_THROWS_AS(profile(0, 10), invalid_input);
}

TEST_CASE("enumerate_profiles examples") {
  ProfileFilter k3_only;
  k3_only.k3 = true;
  auto k3 = enumerate_profiles(8, 50, k3_only, 10);
  REQUIRE(k3.size() == 4);
  CHECK(k3[0].d == 14);
  CHECK(k3[1].d == 26);
  CHECK(k3[2].d == 38);
  CHECK(k3[3].d == 42);

  ProfileFilter tail_only;
  tail_only.tail = true;
  auto tails = enumerate_profiles(8, 100, tail_only, 10);
  std::vector<std::int64_t> ds;
  for (const auto& p : tails) ds.push_back(p.d);
  CHECK(ds == std::vector<std::int64_t>{24, 26, 54, 56, 96, 98});

  auto singleton = enumerate_profiles(8, 8, {}, 10);
  REQUIRE(singleton.size() == 1);
  CHECK(singleton[0] == profile(8, 10));

  CHECK_THROWS_AS(enumerate_profiles(50, 8, {}, 10), invalid_range);
  CHECK_THROWS_AS(enumerate_profiles(0, 8, {}, 10), invalid_range);
}

TEST_CASE("certificate soundness over all admissible d <= 5000") {
  for (std::int64_t d = 8; d <= 5000; ++d) {
    if (!is_admissible(d)) continue;
    auto p = profile(d, 5);
    if (p.fano_hilb2) CHECK(verifies(*p.fano_hilb2, d));
    if (p.bulles) CHECK(verifies(*p.bulles, d));
    if (p.addington.certificate) CHECK(verifies(*p.addington.certificate, d));
    if (p.llsvs.certificate) CHECK(verifies(*p.llsvs.certificate, d));
    if (p.tail) CHECK(verifies(*p.tail, d));
  }
}

TEST_CASE("bulles completeness against the triple-scan oracle, d <= 2000") {
  for (std::int64_t d = 8; d <= 2000; ++d) {
    if (!is_admissible(d)) continue;
    auto got = bulles_certificate(d);
    auto expected = oracle_bulles(d);
    REQUIRE(got.has_value() == expected.has_value());
    if (got) CHECK(*got == *expected);
  }
}

TEST_CASE("k3 criterion against factorization oracle, d <= 2000") {
  for (std::int64_t d = 1; d <= 2000; ++d) {
    CHECK(has_associated_k3(d) == oracle_k3(d));
  }
}

TEST_CASE("residue coherence: tails are admissible") {
  for (std::int64_t d = 1; d <= 5000; ++d) {
    if (tail_certificate(d)) {
      CHECK(is_admissible(d));
      CHECK(d >= 24);
    }
  }
}

TEST_CASE("monotone consistency: k3 implies admissible") {
  for (std::int64_t d = 1; d <= 5000; ++d) {
    if (has_associated_k3(d)) CHECK(is_admissible(d));
  }
}

TEST_CASE("fano / addington coherence") {
  for (std::int64_t d = 8; d <= 5000; ++d) {
    if (!is_admissible(d)) continue;
    auto fano = fano_hilb2(d);
    if (!fano) continue;
    auto pell = addington_certificate(d, 1);
    REQUIRE(pell.certificate.has_value());
    CHECK(pell.certificate->n == fano->n);
    CHECK(pell.certificate->a == 1);
  }
}
