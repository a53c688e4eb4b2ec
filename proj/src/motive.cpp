#include "hassett/motive.hpp"

#include <algorithm>

#include "hassett/errors.hpp"

namespace hassett::motive {

namespace {

using trace::Anchor;

std::string power_str(int p) {
  if (p == 1) return "L";
  return "L^" + std::to_string(p);
}

}  // namespace

int MotiveExpression::total_dimension() const {
  int total = 0;
  for (const Term& t : summands) {
    std::visit(
        [&](const auto& term) {
          using T = std::decay_t<decltype(term)>;
          if constexpr (std::is_same_v<T, Unit>) {
            total += 1;
          } else if constexpr (std::is_same_v<T, Lefschetz>) {
            total += term.multiplicity;
          } else {
            total += term.dimension;
          }
        },
        t);
  }
  return total;
}

std::string MotiveExpression::pretty() const {
  std::string out;
  for (const Term& t : summands) {
    if (!out.empty()) out += " ⊕ ";
    std::visit(
        [&](const auto& term) {
          using T = std::decay_t<decltype(term)>;
          if constexpr (std::is_same_v<T, Unit>) {
            out += "1";
          } else if constexpr (std::is_same_v<T, Lefschetz>) {
            out += power_str(term.power);
            if (term.multiplicity > 1)
              out += "^{⊕" + std::to_string(term.multiplicity) + "}";
          } else if constexpr (std::is_same_v<T, TranscendentalCubic>) {
            out += "t";
          } else {
            out += "t2";
            if (term.twist != 0) out += "(" + std::to_string(term.twist) + ")";
          }
        },
        t);
  }
  return out;
}

MotiveExpression chow_kunneth_cubic(int rho2) {
  if (rho2 < 1 || rho2 > kCubicMiddleBetti)
    throw invalid_input("rho2 must be in [1, 23], got " + std::to_string(rho2));
  MotiveExpression e;
  e.summands = {Unit{}, Lefschetz{1, 1}, Lefschetz{2, rho2},
                TranscendentalCubic{kCubicMiddleBetti - rho2}, Lefschetz{3, 1},
                Lefschetz{4, 1}};
  return e;
}

MotiveExpression chow_kunneth_k3(int rho) {
  if (rho < 1 || rho > kK3SecondBetti)
    throw invalid_input("rho must be in [1, 22], got " + std::to_string(rho));
  MotiveExpression e;
  e.summands = {Unit{}, Lefschetz{1, rho},
                TranscendentalK3{kK3SecondBetti - rho, 0}, Lefschetz{2, 1}};
  return e;
}

MotiveExpression substitute_k3(const MotiveExpression& x_expr, int rho2, int rho_s) {
  if (rho2 != rho_s + 1)
    throw dimension_mismatch(
        "rank relation rho2 = rho_s + 1 violated: rho2 = " + std::to_string(rho2) +
        ", rho_s = " + std::to_string(rho_s));
  MotiveExpression out = x_expr;
  bool replaced = false;
  for (Term& t : out.summands) {
    if (auto* tc = std::get_if<TranscendentalCubic>(&t)) {
      t = TranscendentalK3{tc->dimension, 1};
      replaced = true;
      break;
    }
  }
  if (!replaced)
    throw invalid_input("expression has no cubic transcendental term");
  return out;
}

ClassificationResult classify(const conditions::DiscriminantProfile& profile,
                              const std::optional<family::FamilyWitness>& witness) {
  if (!profile.admissible) throw not_admissible(profile.d);

  ClassificationResult result;
  auto& steps = result.trace.steps;
  std::string d_str = std::to_string(profile.d);

  steps.push_back({"discriminant " + d_str +
                       " is admissible, so its Hassett divisor is nonempty",
                   Anchor::admissibility});

  if (!witness) {
    steps.push_back(
        {"no family witness supplied; no evidence that an associated K3 with "
         "Neron-Severi rank >= 19 exists, status stays unknown",
         Anchor::thm_4_1});
    return result;
  }

  // Throws witness_invalid if any gate fails.
  family::verify_witness(*witness);

  std::optional<std::int64_t> k3_linked;
  std::optional<conditions::BullesCertificate> bulles;
  for (std::int64_t disc : witness->all_discs) {
    if (!conditions::has_associated_k3(disc)) continue;
    if (auto cert = conditions::bulles_certificate(disc)) {
      k3_linked = disc;
      bulles = cert;
      break;
    }
  }
  if (!k3_linked) {
    steps.push_back(
        {"witness has no discriminant with both an associated K3 and a (***) "
         "certificate; the transcendental motive cannot be transferred",
         Anchor::condition_star3});
    return result;
  }

  int count = static_cast<int>(witness->all_discs.size());
  if (count < family::kLabellingCount) {
    steps.push_back({"witness carries only " + std::to_string(count) +
                         " labellings; rank >= 19 for the K3 is not forced",
                     Anchor::thm_2_2});
    return result;
  }

  steps.push_back({"the " + std::to_string(count) +
                       "-fold intersection is nonempty and its generic member "
                       "has algebraic rank " + std::to_string(count + 1),
                   Anchor::thm_2_2});
  steps.push_back({"discriminant " + std::to_string(*k3_linked) +
                       " satisfies (***) with (f, g, n) = (" +
                       std::to_string(bulles->f) + ", " + std::to_string(bulles->g) +
                       ", " + std::to_string(bulles->n) +
                       ") and has an associated K3 surface S",
                   Anchor::condition_star3});
  steps.push_back({"S has Neron-Severi rank 19 generically (20 at special "
                       "points), so h(S) is finite dimensional and abelian",
                   Anchor::thm_3_2});
  steps.push_back({"t(X) = t2(S)(1) transfers both properties through the "
                       "Chow-Kunneth decomposition of h(X)",
                   Anchor::eq_3});
  steps.push_back({"every member of the one-dimensional family has finite "
                       "dimensional abelian Chow motive",
                   Anchor::thm_4_1});

  result.status = {Knowledge::proven, Knowledge::proven};
  return result;
}

const char* relation_tag(HkRelation r) {
  switch (r) {
    case HkRelation::isomorphic_hilb2: return "isomorphic_hilb2";
    case HkRelation::birational_hilb2: return "birational_hilb2";
    case HkRelation::birational_hilb4: return "birational_hilb4";
    case HkRelation::none_known: return "none_known";
    case HkRelation::undefined_contains_plane: return "undefined_contains_plane";
  }
  return "?";
}

HyperkahlerReport fano_status(const conditions::DiscriminantProfile& profile,
                              const MotiveStatus& status) {
  HyperkahlerReport report;
  if (profile.fano_hilb2) {
    report.relation = HkRelation::isomorphic_hilb2;
    report.fano = profile.fano_hilb2;
    report.motive_status = status;
  } else if (profile.addington.certificate) {
    report.relation = HkRelation::birational_hilb2;
    report.pell = profile.addington.certificate;
    report.motive_status = status;
  } else {
    report.relation = HkRelation::none_known;
    report.motive_status = {Knowledge::unknown, Knowledge::unknown};
  }
  return report;
}

HyperkahlerReport llsvs_status(const conditions::DiscriminantProfile& profile,
                               const MotiveStatus& status) {
  HyperkahlerReport report;
  if (profile.contains_plane_divisor) {
    report.relation = HkRelation::undefined_contains_plane;
    report.motive_status = {Knowledge::unknown, Knowledge::unknown};
  } else if (profile.llsvs.certificate) {
    report.relation = HkRelation::birational_hilb4;
    report.pell = profile.llsvs.certificate;
    report.motive_status = status;
  } else {
    report.relation = HkRelation::none_known;
    report.motive_status = {Knowledge::unknown, Knowledge::unknown};
  }
  return report;
}

}  // namespace hassett::motive
