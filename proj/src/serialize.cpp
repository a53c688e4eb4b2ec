#include "hassett/serialize.hpp"

#include "hassett/errors.hpp"

using nlohmann::json;

namespace {

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) {
    v = j.at(key).get<T>();
  } else {
    v = std::nullopt;
  }
}

}  // namespace

namespace hassett::arith {

void to_json(json& j, const PrimeFactorization& f) {
  j = json{{"value", f.value}, {"factors", json::array()}};
  for (const auto& [p, e] : f.factors) j["factors"].push_back({p, e});
}

void from_json(const json& j, PrimeFactorization& f) {
  f.value = j.at("value").get<std::int64_t>();
  f.factors.clear();
  for (const auto& pair : j.at("factors")) {
    f.factors.push_back({pair.at(0).get<std::int64_t>(), pair.at(1).get<int>()});
  }
}

}  // namespace hassett::arith

namespace hassett::conditions {

void to_json(json& j, const FanoCertificate& c) { j = json{{"n", c.n}}; }
void from_json(const json& j, FanoCertificate& c) { c.n = j.at("n").get<std::int64_t>(); }

void to_json(json& j, const BullesCertificate& c) {
  j = json{{"f", c.f}, {"g", c.g}, {"n", c.n}};
}
void from_json(const json& j, BullesCertificate& c) {
  c.f = j.at("f").get<std::int64_t>();
  c.g = j.at("g").get<std::int64_t>();
  c.n = j.at("n").get<std::int64_t>();
}

void to_json(json& j, const PellCertificate& c) {
  j = json{{"kind", c.kind == PellKind::addington ? "addington" : "llsvs"},
           {"n", c.n},
           {"a", c.a}};
}
void from_json(const json& j, PellCertificate& c) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "addington") {
    c.kind = PellKind::addington;
  } else if (kind == "llsvs") {
    c.kind = PellKind::llsvs;
  } else {
    throw invalid_input("unknown pell kind: " + kind);
  }
  c.n = j.at("n").get<std::int64_t>();
  c.a = j.at("a").get<std::int64_t>();
}

void to_json(json& j, const PellSearch& s) {
  j = json{{"a_bound", s.a_bound}, {"bound_exhausted", s.bound_exhausted()}};
  put_optional(j, "certificate", s.certificate);
}
void from_json(const json& j, PellSearch& s) {
  s.a_bound = j.at("a_bound").get<std::int64_t>();
  get_optional(j, "certificate", s.certificate);
}

void to_json(json& j, const TailCertificate& c) {
  j = json{{"m", c.m}, {"offset", c.offset}, {"m_factors", c.m_factors}};
}
void from_json(const json& j, TailCertificate& c) {
  c.m = j.at("m").get<std::int64_t>();
  c.offset = j.at("offset").get<int>();
  c.m_factors = j.at("m_factors").get<arith::PrimeFactorization>();
}

void to_json(json& j, const DiscriminantProfile& p) {
  j = json{{"d", p.d},
           {"residue_mod_6", p.residue_mod_6},
           {"admissible", p.admissible},
           {"has_associated_k3", p.has_associated_k3},
           {"bulles_with_k3", p.bulles_with_k3},
           {"addington", p.addington},
           {"llsvs", p.llsvs},
           {"contains_plane_divisor", p.contains_plane_divisor},
           {"c14_member_rational", p.c14_member_rational}};
  put_optional(j, "fano_hilb2", p.fano_hilb2);
  put_optional(j, "bulles", p.bulles);
  put_optional(j, "tail", p.tail);
}
void from_json(const json& j, DiscriminantProfile& p) {
  p.d = j.at("d").get<std::int64_t>();
  p.residue_mod_6 = j.at("residue_mod_6").get<int>();
  p.admissible = j.at("admissible").get<bool>();
  p.has_associated_k3 = j.at("has_associated_k3").get<bool>();
  p.bulles_with_k3 = j.at("bulles_with_k3").get<bool>();
  p.addington = j.at("addington").get<PellSearch>();
  p.llsvs = j.at("llsvs").get<PellSearch>();
  p.contains_plane_divisor = j.at("contains_plane_divisor").get<bool>();
  p.c14_member_rational = j.at("c14_member_rational").get<bool>();
  get_optional(j, "fano_hilb2", p.fano_hilb2);
  get_optional(j, "bulles", p.bulles);
  get_optional(j, "tail", p.tail);
}

}  // namespace hassett::conditions

namespace hassett::lattice {

void to_json(json& j, const GramMatrix& g) { j = g.entries; }
void from_json(const json& j, GramMatrix& g) {
  g.entries = j.get<std::vector<std::vector<std::int64_t>>>();
}

void to_json(json& j, const Labelling& l) {
  j = json{{"gram", l.gram}, {"discriminant", l.discriminant}};
}
void from_json(const json& j, Labelling& l) {
  l.gram = j.at("gram").get<GramMatrix>();
  l.discriminant = j.at("discriminant").get<std::int64_t>();
}

}  // namespace hassett::lattice

namespace hassett::family {

void to_json(json& j, const FamilyWitness& w) {
  j = json{{"target_d", w.target_d},
           {"k3_disc", w.k3_disc},
           {"tail_discs", w.tail_discs},
           {"all_discs", w.all_discs}};
  // Certificate bundle, recomputed so the serialized witness is self-contained.
  json certs = json::object();
  if (auto b = conditions::bulles_certificate(w.k3_disc)) {
    certs["k3_bulles"] = *b;
  }
  json tails = json::object();
  for (std::int64_t t : w.tail_discs) {
    if (auto cert = conditions::tail_certificate(t)) tails[std::to_string(t)] = *cert;
  }
  certs["tails"] = tails;
  j["certificates"] = certs;
}
void from_json(const json& j, FamilyWitness& w) {
  w.target_d = j.at("target_d").get<std::int64_t>();
  w.k3_disc = j.at("k3_disc").get<std::int64_t>();
  w.tail_discs = j.at("tail_discs").get<std::vector<std::int64_t>>();
  w.all_discs = j.at("all_discs").get<std::vector<std::int64_t>>();
}

}  // namespace hassett::family

namespace hassett::trace {

void to_json(json& j, const TraceStep& s) {
  j = json{{"statement", s.statement}, {"anchor", anchor_tag(s.citation)}};
}
void from_json(const json& j, TraceStep& s) {
  s.statement = j.at("statement").get<std::string>();
  s.citation = anchor_from_tag(j.at("anchor").get<std::string>());
}

void to_json(json& j, const DerivationTrace& t) { j = t.steps; }
void from_json(const json& j, DerivationTrace& t) {
  t.steps = j.get<std::vector<TraceStep>>();
}

}  // namespace hassett::trace

namespace hassett::motive {

void to_json(json& j, const MotiveExpression& e) {
  json terms = json::array();
  for (const Term& t : e.summands) {
    std::visit(
        [&](const auto& term) {
          using T = std::decay_t<decltype(term)>;
          if constexpr (std::is_same_v<T, Unit>) {
            terms.push_back({{"type", "unit"}});
          } else if constexpr (std::is_same_v<T, Lefschetz>) {
            terms.push_back({{"type", "lefschetz"},
                             {"power", term.power},
                             {"multiplicity", term.multiplicity}});
          } else if constexpr (std::is_same_v<T, TranscendentalCubic>) {
            terms.push_back(
                {{"type", "transcendental_cubic"}, {"dimension", term.dimension}});
          } else {
            terms.push_back({{"type", "transcendental_k3"},
                             {"dimension", term.dimension},
                             {"twist", term.twist}});
          }
        },
        t);
  }
  j = json{{"summands", terms}, {"pretty", e.pretty()}};
}
void from_json(const json& j, MotiveExpression& e) {
  e.summands.clear();
  for (const auto& t : j.at("summands")) {
    auto type = t.at("type").get<std::string>();
    if (type == "unit") {
      e.summands.emplace_back(Unit{});
    } else if (type == "lefschetz") {
      e.summands.emplace_back(
          Lefschetz{t.at("power").get<int>(), t.at("multiplicity").get<int>()});
    } else if (type == "transcendental_cubic") {
      e.summands.emplace_back(TranscendentalCubic{t.at("dimension").get<int>()});
    } else if (type == "transcendental_k3") {
      e.summands.emplace_back(
          TranscendentalK3{t.at("dimension").get<int>(), t.at("twist").get<int>()});
    } else {
      throw invalid_input("unknown motive term type: " + type);
    }
  }
}

void to_json(json& j, const MotiveStatus& s) {
  auto tag = [](Knowledge k) { return k == Knowledge::proven ? "proven" : "unknown"; };
  j = json{{"finite_dimensional", tag(s.finite_dimensional)},
           {"abelian_type", tag(s.abelian_type)}};
}
void from_json(const json& j, MotiveStatus& s) {
  auto parse = [](const std::string& v) {
    if (v == "proven") return Knowledge::proven;
    if (v == "unknown") return Knowledge::unknown;
    throw invalid_input("unknown knowledge tag: " + v);
  };
  s.finite_dimensional = parse(j.at("finite_dimensional").get<std::string>());
  s.abelian_type = parse(j.at("abelian_type").get<std::string>());
}

void to_json(json& j, const HyperkahlerReport& r) {
  j = json{{"relation", relation_tag(r.relation)}, {"motive_status", r.motive_status}};
  put_optional(j, "fano", r.fano);
  put_optional(j, "pell", r.pell);
}
void from_json(const json& j, HyperkahlerReport& r) {
  auto tag = j.at("relation").get<std::string>();
  bool found = false;
  for (HkRelation rel :
       {HkRelation::isomorphic_hilb2, HkRelation::birational_hilb2,
        HkRelation::birational_hilb4, HkRelation::none_known,
        HkRelation::undefined_contains_plane}) {
    if (tag == relation_tag(rel)) {
      r.relation = rel;
      found = true;
      break;
    }
  }
  if (!found) throw invalid_input("unknown relation tag: " + tag);
  r.motive_status = j.at("motive_status").get<MotiveStatus>();
  get_optional(j, "fano", r.fano);
  get_optional(j, "pell", r.pell);
}

}  // namespace hassett::motive
