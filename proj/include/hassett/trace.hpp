#pragma once

#include <string>
#include <vector>

namespace hassett::trace {

// Fixed catalogue of citable statements; every derivation step points at one.
enum class Anchor {
  admissibility,   // d >= 8, d = 0,2 mod 6; associated-K3 criterion
  thm_2_2,         // nonemptiness of multi-divisor intersections, tail shape
  eq_2,            // Chow-Kunneth decomposition of h(X)
  eq_3,            // t(X) = t2(S)(1)
  condition_star3, // d = f^2 g with g | 2n^2+2n+2
  thm_3_2,         // K3 with rho = 19, 20 has finite dimensional abelian motive
  thm_4_1,         // main classification statement
  prop_fano,       // Fano variety of lines inherits the motive properties
  prop_llsvs,      // LLSvS 8fold inherits the motive properties
};

const char* anchor_tag(Anchor a);
Anchor anchor_from_tag(const std::string& tag);

struct TraceStep {
  std::string statement;
  Anchor citation = Anchor::admissibility;

  bool operator==(const TraceStep&) const = default;
};

struct DerivationTrace {
  std::vector<TraceStep> steps;

  bool contains(Anchor a) const;
  // First index citing a, or -1.
  int index_of(Anchor a) const;

  bool operator==(const DerivationTrace&) const = default;
};

}  // namespace hassett::trace
