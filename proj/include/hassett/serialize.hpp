#pragma once

#include <nlohmann/json.hpp>

#include "hassett/arith.hpp"
#include "hassett/conditions.hpp"
#include "hassett/family.hpp"
#include "hassett/lattice.hpp"
#include "hassett/motive.hpp"
#include "hassett/trace.hpp"

// JSON round-trip for every payload type the CLI emits.

namespace hassett::arith {
void to_json(nlohmann::json& j, const PrimeFactorization& f);
void from_json(const nlohmann::json& j, PrimeFactorization& f);
}  // namespace hassett::arith

namespace hassett::conditions {
void to_json(nlohmann::json& j, const FanoCertificate& c);
void from_json(const nlohmann::json& j, FanoCertificate& c);
void to_json(nlohmann::json& j, const BullesCertificate& c);
void from_json(const nlohmann::json& j, BullesCertificate& c);
void to_json(nlohmann::json& j, const PellCertificate& c);
void from_json(const nlohmann::json& j, PellCertificate& c);
void to_json(nlohmann::json& j, const PellSearch& s);
void from_json(const nlohmann::json& j, PellSearch& s);
void to_json(nlohmann::json& j, const TailCertificate& c);
void from_json(const nlohmann::json& j, TailCertificate& c);
void to_json(nlohmann::json& j, const DiscriminantProfile& p);
void from_json(const nlohmann::json& j, DiscriminantProfile& p);
}  // namespace hassett::conditions

namespace hassett::lattice {
// Gram matrices serialize as row-major arrays of arrays of integers.
void to_json(nlohmann::json& j, const GramMatrix& g);
void from_json(const nlohmann::json& j, GramMatrix& g);
void to_json(nlohmann::json& j, const Labelling& l);
void from_json(const nlohmann::json& j, Labelling& l);
}  // namespace hassett::lattice

namespace hassett::family {
void to_json(nlohmann::json& j, const FamilyWitness& w);
void from_json(const nlohmann::json& j, FamilyWitness& w);
}  // namespace hassett::family

namespace hassett::trace {
void to_json(nlohmann::json& j, const TraceStep& s);
void from_json(const nlohmann::json& j, TraceStep& s);
void to_json(nlohmann::json& j, const DerivationTrace& t);
void from_json(const nlohmann::json& j, DerivationTrace& t);
}  // namespace hassett::trace

namespace hassett::motive {
void to_json(nlohmann::json& j, const MotiveExpression& e);
void from_json(const nlohmann::json& j, MotiveExpression& e);
void to_json(nlohmann::json& j, const MotiveStatus& s);
void from_json(const nlohmann::json& j, MotiveStatus& s);
void to_json(nlohmann::json& j, const HyperkahlerReport& r);
void from_json(const nlohmann::json& j, HyperkahlerReport& r);
}  // namespace hassett::motive
