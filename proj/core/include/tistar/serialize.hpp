#pragma once

// JSON encodings (nlohmann/json).  Every to_json has a matching from_json so
// documents round-trip.

#include <json.hpp>

#include "tistar/characterize.hpp"
#include "tistar/diophantine.hpp"
#include "tistar/polycert.hpp"
#include "tistar/transmission.hpp"
#include "tistar/trees.hpp"
#include "tistar/verdict.hpp"

namespace tistar {

using json = nlohmann::json;

void to_json(json& j, const VertexLabel& v);
void from_json(const json& j, VertexLabel& v);
void to_json(json& j, const Reason& r);
void from_json(const json& j, Reason& r);
void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);
void to_json(json& j, const Verdict& v);
void from_json(const json& j, Verdict& v);

// A verdict together with the tree it is about; also one catalog line.
struct VerdictRecord {
  std::string spec;
  std::int64_t n = 0;
  Verdict verdict;

  bool operator==(const VerdictRecord&) const = default;
};
void to_json(json& j, const VerdictRecord& r);
void from_json(const json& j, VerdictRecord& r);

json transmissions_to_json(const TransmissionTable& table);

void to_json(json& j, const BoxDioProblem& p);
void from_json(const json& j, BoxDioProblem& p);
void to_json(json& j, const DivisorWitness& w);
void from_json(const json& j, DivisorWitness& w);

json explanation_to_json(const Explanation& ex);

void to_json(json& j, const LinPoly& p);
void from_json(const json& j, LinPoly& p);
void to_json(json& j, const QuadPoly& p);
void from_json(const json& j, QuadPoly& p);
void to_json(json& j, const CaseInputs& c);
void from_json(const json& j, CaseInputs& c);
void to_json(json& j, const GApprox& g);
void from_json(const json& j, GApprox& g);
void to_json(json& j, const ManualCheck& m);
void from_json(const json& j, ManualCheck& m);
void to_json(json& j, const Residue& r);
void from_json(const json& j, Residue& r);
void to_json(json& j, const Discharge& d);
void from_json(const json& j, Discharge& d);
void to_json(json& j, const CaseCertificate& c);
void from_json(const json& j, CaseCertificate& c);
void to_json(json& j, const Attestation& a);
void from_json(const json& j, Attestation& a);
void to_json(json& j, const FamilySpec& f);
void from_json(const json& j, FamilySpec& f);
void to_json(json& j, const FamilyCertificate& c);
void from_json(const json& j, FamilyCertificate& c);
void to_json(json& j, const Inapplicable& i);
void from_json(const json& j, Inapplicable& i);
void to_json(json& j, const CertifyOutcome& o);
void from_json(const json& j, CertifyOutcome& o);

}  // namespace tistar
