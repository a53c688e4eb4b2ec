#include "hassett/trace.hpp"

#include "hassett/errors.hpp"

namespace hassett::trace {

const char* anchor_tag(Anchor a) {
  switch (a) {
    case Anchor::admissibility: return "admissibility-2.1";
    case Anchor::thm_2_2: return "thm-2.2";
    case Anchor::eq_2: return "eq-2";
    case Anchor::eq_3: return "eq-3";
    case Anchor::condition_star3: return "condition-***";
    case Anchor::thm_3_2: return "thm-3.2";
    case Anchor::thm_4_1: return "thm-4.1";
    case Anchor::prop_fano: return "prop-fano";
    case Anchor::prop_llsvs: return "prop-llsvs";
  }
  return "?";
}

Anchor anchor_from_tag(const std::string& tag) {
  for (Anchor a : {Anchor::admissibility, Anchor::thm_2_2, Anchor::eq_2,
                   Anchor::eq_3, Anchor::condition_star3, Anchor::thm_3_2,
                   Anchor::thm_4_1, Anchor::prop_fano, Anchor::prop_llsvs}) {
    if (tag == anchor_tag(a)) return a;
  }
  throw invalid_input("unknown anchor tag: " + tag);
}

bool DerivationTrace::contains(Anchor a) const { return index_of(a) >= 0; }

int DerivationTrace::index_of(Anchor a) const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].citation == a) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace hassett::trace
