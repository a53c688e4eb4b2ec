#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hassett/conditions.hpp"
#include "hassett/family.hpp"
#include "hassett/trace.hpp"

namespace hassett::motive {

inline constexpr int kCubicMiddleBetti = 23;  // dim H^4 of a cubic fourfold
inline constexpr int kK3SecondBetti = 22;     // dim H^2 of a K3 surface
inline constexpr int kCubicTotalDim = 27;
inline constexpr int kK3TotalDim = 24;

struct Unit {
  bool operator==(const Unit&) const = default;
};
struct Lefschetz {
  int power = 1;
  int multiplicity = 1;
  bool operator==(const Lefschetz&) const = default;
};
struct TranscendentalCubic {
  int dimension = 0;
  bool operator==(const TranscendentalCubic&) const = default;
};
struct TranscendentalK3 {
  int dimension = 0;
  int twist = 0;
  bool operator==(const TranscendentalK3&) const = default;
};

using Term = std::variant<Unit, Lefschetz, TranscendentalCubic, TranscendentalK3>;

// Direct-sum decomposition; Unit and each Lefschetz copy contribute 1 to the
// total cohomological dimension, transcendental terms their dimension.
struct MotiveExpression {
  std::vector<Term> summands;

  int total_dimension() const;
  std::string pretty() const;

  bool operator==(const MotiveExpression&) const = default;
};

// 1 + L + L^2 (rho2 copies) + t(X) + L^3 + L^4, total dimension 27.
MotiveExpression chow_kunneth_cubic(int rho2);

// 1 + L (rho copies) + t2(S) + L^2, total dimension 24.
MotiveExpression chow_kunneth_k3(int rho);

// Replaces the cubic transcendental term by the twisted K3 one; requires the
// rank relation rho2 = rho_s + 1 (throws dimension_mismatch otherwise).
MotiveExpression substitute_k3(const MotiveExpression& x_expr, int rho2, int rho_s);

enum class Knowledge { proven, unknown };

struct MotiveStatus {
  Knowledge finite_dimensional = Knowledge::unknown;
  Knowledge abelian_type = Knowledge::unknown;

  bool operator==(const MotiveStatus&) const = default;
};

struct ClassificationResult {
  MotiveStatus status;
  trace::DerivationTrace trace;
};

// Emits proven/proven exactly when a verified witness carries a K3-linked
// discriminant with a (***) certificate and at least 19 distinct labellings.
// Otherwise the trace explains the first failed gate.
ClassificationResult classify(const conditions::DiscriminantProfile& profile,
                              const std::optional<family::FamilyWitness>& witness);

enum class HkRelation {
  isomorphic_hilb2,
  birational_hilb2,
  birational_hilb4,
  none_known,
  undefined_contains_plane,
};

const char* relation_tag(HkRelation r);

struct HyperkahlerReport {
  HkRelation relation = HkRelation::none_known;
  MotiveStatus motive_status;
  std::optional<conditions::FanoCertificate> fano;
  std::optional<conditions::PellCertificate> pell;

  bool operator==(const HyperkahlerReport&) const = default;
};

// Relation of the Fano variety of lines to the Hilbert square of the
// associated K3, and the motive status it inherits.
HyperkahlerReport fano_status(const conditions::DiscriminantProfile& profile,
                              const MotiveStatus& status);

// Same for the LLSvS 8fold and the Hilbert 4-scheme; undefined when the
// cubics contain a plane (d = 8).
HyperkahlerReport llsvs_status(const conditions::DiscriminantProfile& profile,
                               const MotiveStatus& status);

}  // namespace hassett::motive
