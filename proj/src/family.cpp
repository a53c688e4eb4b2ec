#include "hassett/family.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hassett/conditions.hpp"
#include "hassett/errors.hpp"
#include "hassett/lattice.hpp"

namespace hassett::family {

namespace {

using trace::Anchor;
using trace::DerivationTrace;

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

FamilyWitness make_witness(std::int64_t target_d, std::int64_t k3_disc,
                           std::vector<std::int64_t> tail_discs) {
  FamilyWitness w;
  w.target_d = target_d;
  w.k3_disc = k3_disc;
  w.tail_discs = std::move(tail_discs);
  std::set<std::int64_t> all(w.tail_discs.begin(), w.tail_discs.end());
  all.insert(target_d);
  all.insert(k3_disc);
  w.all_discs.assign(all.begin(), all.end());
  return w;
}

FamilyWitness build_witness(std::int64_t d, std::int64_t k3_disc) {
  if (!conditions::is_admissible(d)) throw not_admissible(d);
  if (!conditions::has_associated_k3(k3_disc))
    throw invalid_k3_disc(k3_disc, "fails the associated-K3 criterion");
  if (!conditions::bulles_certificate(k3_disc))
    throw invalid_k3_disc(k3_disc, "no certificate for condition (***)");

  std::set<std::int64_t> all{d, k3_disc};
  std::vector<std::int64_t> tails;
  // Tail stream 6m^2, 6m^2+2 is ascending in m; dedup against picks so far.
  for (std::int64_t m = 2; static_cast<int>(all.size()) < kLabellingCount; ++m) {
    for (int offset : {0, 2}) {
      if (static_cast<int>(all.size()) >= kLabellingCount) break;
      std::int64_t t = 6 * m * m + offset;
      if (all.count(t)) continue;
      all.insert(t);
      tails.push_back(t);
    }
  }
  return make_witness(d, k3_disc, std::move(tails));
}

FamilyWitness build_witness_both(std::int64_t d) { return build_witness(d, 182); }

DerivationTrace verify_witness(const FamilyWitness& w) {
  DerivationTrace trace;

  // Gate 1: the derived union is consistent and every member is admissible.
  std::set<std::int64_t> expected(w.tail_discs.begin(), w.tail_discs.end());
  expected.insert(w.target_d);
  expected.insert(w.k3_disc);
  if (std::vector<std::int64_t>(expected.begin(), expected.end()) != w.all_discs)
    throw witness_invalid("union", "all_discs is not the sorted union of the members");
  for (std::int64_t disc : w.all_discs) {
    if (disc <= 0 || !conditions::is_admissible(disc))
      throw witness_invalid("admissibility",
                            "discriminant " + std::to_string(disc) + " is not admissible");
  }
  trace.steps.push_back({"all discriminants {" + join(w.all_discs) +
                             "} are admissible, so each divisor is nonempty",
                         Anchor::admissibility});

  // Gate 2: the K3 slot really has an associated K3 surface.
  if (!conditions::has_associated_k3(w.k3_disc))
    throw witness_invalid("k3_criterion",
                          std::to_string(w.k3_disc) + " fails the associated-K3 criterion");
  trace.steps.push_back({"discriminant " + std::to_string(w.k3_disc) +
                             " passes the associated-K3 divisibility criterion",
                         Anchor::admissibility});

  // Gate 3: the K3 slot satisfies condition (***).
  auto bulles = conditions::bulles_certificate(w.k3_disc);
  if (!bulles)
    throw witness_invalid("k3_bulles",
                          std::to_string(w.k3_disc) + " has no certificate for (***)");
  trace.steps.push_back({"condition (***) holds for " + std::to_string(w.k3_disc) +
                             " with (f, g, n) = (" + std::to_string(bulles->f) + ", " +
                             std::to_string(bulles->g) + ", " + std::to_string(bulles->n) + ")",
                         Anchor::condition_star3});

  // Gate 4: every tail slot has the 6m^2 / 6m^2+2 shape.
  for (std::int64_t t : w.tail_discs) {
    auto cert = conditions::tail_certificate(t);
    if (!cert || !conditions::verifies(*cert, t))
      throw witness_invalid("tail",
                            std::to_string(t) + " is not of the form 6m^2 or 6m^2+2, m >= 2");
  }
  trace.steps.push_back({"the " + std::to_string(w.tail_discs.size()) +
                             " tail discriminants all have the shape 6m^2 or 6m^2+2, "
                             "so the full intersection is nonempty",
                         Anchor::thm_2_2});

  // Gate 5: enough distinct labellings for the rank count.
  if (static_cast<int>(w.all_discs.size()) < kLabellingCount)
    throw witness_invalid("count", "only " + std::to_string(w.all_discs.size()) +
                                       " distinct discriminants, need >= " +
                                       std::to_string(kLabellingCount));
  trace.steps.push_back({std::to_string(w.all_discs.size()) +
                             " distinct labellings give the generic member rank " +
                             std::to_string(w.all_discs.size() + 1) +
                             " algebraic middle cohomology",
                         Anchor::thm_2_2});

  // Gate 6: the prescribed labellings are simultaneously realizable by a
  // positive definite form.
  try {
    lattice::GramMatrix gram = lattice::simultaneous_gram(w.all_discs);
    trace.steps.push_back({"the rank-" + std::to_string(gram.rank()) +
                               " simultaneous Gram matrix is positive definite",
                           Anchor::thm_2_2});
  } catch (const positivity_failure& e) {
    throw witness_invalid("positivity", e.what());
  }

  return trace;
}

}  // namespace hassett::family
