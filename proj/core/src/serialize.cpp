#include "tistar/serialize.hpp"

namespace tistar {

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null())
    v = j.at(key).get<T>();
  else
    v.reset();
}

}  // namespace

void to_json(json& j, const VertexLabel& v) {
  j = json{{"name", to_string(v)},
           {"side", to_string(v.side)},
           {"branch", v.branch},
           {"position", v.position}};
}

void from_json(const json& j, VertexLabel& v) {
  v.side = side_from_string(j.at("side").get<std::string>());
  v.branch = j.at("branch").get<std::int64_t>();
  v.position = j.at("position").get<std::int64_t>();
}

void to_json(json& j, const Reason& r) {
  j = json{{"kind", to_string(r.kind)}};
  if (r.kind != ReasonKind::Collision && r.kind != ReasonKind::SpineShort)
    j["side"] = to_string(r.side);
  if (r.kind == ReasonKind::EqualBranches || r.kind == ReasonKind::LongBranch) j["first"] = r.first;
  if (r.kind == ReasonKind::EqualBranches) j["second"] = r.second;
}

void from_json(const json& j, Reason& r) {
  r = Reason{};
  r.kind = reason_kind_from_string(j.at("kind").get<std::string>());
  r.side = j.contains("side") ? side_from_string(j.at("side").get<std::string>())
                              : (r.kind == ReasonKind::SpineShort ? Side::Spine : Side::A);
  r.first = j.value("first", std::int64_t{0});
  r.second = j.value("second", std::int64_t{0});
}

void to_json(json& j, const Witness& w) {
  j = json{{"label1", w.first}, {"label2", w.second}};
  put_optional(j, "transmission", w.transmission);
}

void from_json(const json& j, Witness& w) {
  w.first = j.at("label1").get<VertexLabel>();
  w.second = j.at("label2").get<VertexLabel>();
  get_optional(j, "transmission", w.transmission);
}

void to_json(json& j, const Verdict& v) {
  j = json{{"is_ti", v.is_ti}};
  put_optional(j, "reason", v.reason);
  put_optional(j, "witness", v.witness);
}

void from_json(const json& j, Verdict& v) {
  v.is_ti = j.at("is_ti").get<bool>();
  get_optional(j, "reason", v.reason);
  get_optional(j, "witness", v.witness);
}

void to_json(json& j, const VerdictRecord& r) {
  j = json{{"spec", r.spec}, {"n", r.n}};
  j.update(json(r.verdict));
}

void from_json(const json& j, VerdictRecord& r) {
  r.spec = j.at("spec").get<std::string>();
  r.n = j.at("n").get<std::int64_t>();
  r.verdict = j.get<Verdict>();
}

json transmissions_to_json(const TransmissionTable& table) {
  json out = json::array();
  for (std::size_t v = 0; v < table.size(); ++v)
    out.push_back({{"label", table.graph().label(v)}, {"transmission", table[v]}});
  return out;
}

void to_json(json& j, const BoxDioProblem& p) {
  j = json{{"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}, {"c4", p.c4}, {"c5", p.c5}};
}

void from_json(const json& j, BoxDioProblem& p) {
  p.c1 = j.at("c1").get<std::int64_t>();
  p.c2 = j.at("c2").get<std::int64_t>();
  p.c3 = j.at("c3").get<std::int64_t>();
  p.c4 = j.at("c4").get<std::int64_t>();
  p.c5 = j.at("c5").get<std::int64_t>();
}

void to_json(json& j, const DivisorWitness& w) {
  j = json{{"p", w.p}, {"q", w.q}, {"x", w.x}, {"y", w.y}};
}

void from_json(const json& j, DivisorWitness& w) {
  w.p = j.at("p").get<std::int64_t>();
  w.q = j.at("q").get<std::int64_t>();
  w.x = j.at("x").get<std::int64_t>();
  w.y = j.at("y").get<std::int64_t>();
}

json explanation_to_json(const Explanation& ex) {
  json out{{"verdict", ex.verdict}, {"elementary_failures", ex.elementary_failures}};
  json cases = json::array();
  for (const auto& c : ex.cases) {
    json entry{{"case", c.target.id()},
               {"value", c.target.value},
               {"problem", c.target.problem},
               {"candidates", c.candidates},
               {"g_form_agrees", c.g_form_agrees}};
    put_optional(entry, "witness", c.witness);
    cases.push_back(std::move(entry));
  }
  out["cases"] = std::move(cases);
  return out;
}

void to_json(json& j, const LinPoly& p) { j = json::array({p.c0, p.c1}); }

void from_json(const json& j, LinPoly& p) {
  if (!j.is_array() || j.size() != 2) throw json::type_error::create(302, "LinPoly needs [c0, c1]", &j);
  p = {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

void to_json(json& j, const QuadPoly& p) { j = json::array({p.c0, p.c1, p.c2}); }

void from_json(const json& j, QuadPoly& p) {
  if (!j.is_array() || j.size() != 3)
    throw json::type_error::create(302, "QuadPoly needs [c0, c1, c2]", &j);
  p = {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

void to_json(json& j, const CaseInputs& c) {
  j = json{{"t1", c.t1}, {"t2", c.t2}, {"t3", c.t3}, {"t4", c.t4},
           {"g1", c.g1}, {"g2", c.g2}, {"g3", c.g3}, {"g4", c.g4}};
}

void from_json(const json& j, CaseInputs& c) {
  j.at("t1").get_to(c.t1);
  j.at("t2").get_to(c.t2);
  j.at("t3").get_to(c.t3);
  j.at("t4").get_to(c.t4);
  j.at("g1").get_to(c.g1);
  j.at("g2").get_to(c.g2);
  j.at("g3").get_to(c.g3);
  j.at("g4").get_to(c.g4);
}

void to_json(json& j, const GApprox& g) {
  j = json{{"role", g.role},       {"lower", g.lower},
           {"c1", g.c1},           {"c2", g.c2},
           {"discriminant", g.discriminant}, {"root", g.root},
           {"bound", g.bound}};
}

void from_json(const json& j, GApprox& g) {
  j.at("role").get_to(g.role);
  j.at("lower").get_to(g.lower);
  j.at("c1").get_to(g.c1);
  j.at("c2").get_to(g.c2);
  j.at("discriminant").get_to(g.discriminant);
  j.at("root").get_to(g.root);
  j.at("bound").get_to(g.bound);
}

void to_json(json& j, const ManualCheck& m) {
  j = json{{"t", m.t}, {"p", m.p}, {"f", m.f}, {"divides", m.divides}};
}

void from_json(const json& j, ManualCheck& m) {
  j.at("t").get_to(m.t);
  j.at("p").get_to(m.p);
  j.at("f").get_to(m.f);
  j.at("divides").get_to(m.divides);
}

void to_json(json& j, const Residue& r) {
  j = json{{"theta", r.theta},         {"modulus", r.modulus},
           {"quotient", r.quotient},   {"sign", r.sign},
           {"remainder", r.remainder}, {"zero_remainder", r.zero_remainder},
           {"threshold", r.threshold}, {"checks", r.checks}};
  put_optional(j, "remainder_root", r.remainder_root);
}

void from_json(const json& j, Residue& r) {
  j.at("theta").get_to(r.theta);
  j.at("modulus").get_to(r.modulus);
  j.at("quotient").get_to(r.quotient);
  j.at("sign").get_to(r.sign);
  j.at("remainder").get_to(r.remainder);
  j.at("zero_remainder").get_to(r.zero_remainder);
  j.at("threshold").get_to(r.threshold);
  j.at("checks").get_to(r.checks);
  get_optional(j, "remainder_root", r.remainder_root);
}

void to_json(json& j, const Discharge& d) {
  if (std::holds_alternative<EmptyInterval>(d)) {
    j = json{{"type", "empty_interval"}};
  } else if (const auto* sq = std::get_if<SmallQuotient>(&d)) {
    j = json{{"type", "small_quotient"}, {"magnitude", sq->magnitude}, {"steps", sq->steps}};
  } else {
    const auto& re = std::get<ResidueEnumeration>(d);
    j = json{{"type", "residue_enumeration"}, {"slope", re.slope}, {"residues", re.residues}};
  }
}

void from_json(const json& j, Discharge& d) {
  const auto type = j.at("type").get<std::string>();
  if (type == "empty_interval") {
    d = EmptyInterval{};
  } else if (type == "small_quotient") {
    SmallQuotient sq;
    j.at("magnitude").get_to(sq.magnitude);
    j.at("steps").get_to(sq.steps);
    d = std::move(sq);
  } else if (type == "residue_enumeration") {
    ResidueEnumeration re;
    j.at("slope").get_to(re.slope);
    j.at("residues").get_to(re.residues);
    d = std::move(re);
  } else {
    throw json::type_error::create(302, "unknown discharge type " + type, &j);
  }
}

void to_json(json& j, const CaseCertificate& c) {
  j = json{{"case", c.case_id},
           {"inputs", c.inputs},
           {"fundamental", c.fundamental},
           {"approximations", c.approximations},
           {"lower", {{"role", c.lower_role}, {"bound", c.lower}}},
           {"upper", {{"role", c.upper_role}, {"bound", c.upper}}},
           {"discharge", c.discharge}};
}

void from_json(const json& j, CaseCertificate& c) {
  j.at("case").get_to(c.case_id);
  j.at("inputs").get_to(c.inputs);
  j.at("fundamental").get_to(c.fundamental);
  j.at("approximations").get_to(c.approximations);
  j.at("lower").at("role").get_to(c.lower_role);
  j.at("lower").at("bound").get_to(c.lower);
  j.at("upper").at("role").get_to(c.upper_role);
  j.at("upper").at("bound").get_to(c.upper);
  j.at("discharge").get_to(c.discharge);
}

void to_json(json& j, const Attestation& a) {
  j = json{{"kind", a.kind == Attestation::Kind::Even ? "even" : "greater"},
           {"claim", a.claim},
           {"lhs", a.lhs},
           {"rhs", a.rhs}};
}

void from_json(const json& j, Attestation& a) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "even" && kind != "greater")
    throw json::type_error::create(302, "unknown attestation kind " + kind, &j);
  a.kind = kind == "even" ? Attestation::Kind::Even : Attestation::Kind::Greater;
  j.at("claim").get_to(a.claim);
  j.at("lhs").get_to(a.lhs);
  j.at("rhs").get_to(a.rhs);
}

void to_json(json& j, const FamilySpec& f) {
  if (const auto* s = std::get_if<SFamilySpec>(&f)) {
    j = json{{"type", "S"}, {"branches", s->branches}};
  } else {
    const auto& h = std::get<HFamilySpec>(f);
    j = json{{"type", "H"}, {"c", h.c}, {"a", h.a}, {"b", h.b}};
  }
  j["text"] = format_family(f);
  j["description"] = describe_family(f);
}

void from_json(const json& j, FamilySpec& f) {
  const auto type = j.at("type").get<std::string>();
  if (type == "S") {
    SFamilySpec s;
    j.at("branches").get_to(s.branches);
    f = std::move(s);
  } else if (type == "H") {
    HFamilySpec h;
    j.at("c").get_to(h.c);
    j.at("a").get_to(h.a);
    j.at("b").get_to(h.b);
    f = h;
  } else {
    throw json::type_error::create(302, "unknown family type " + type, &j);
  }
}

void to_json(json& j, const FamilyCertificate& c) {
  j = json{{"family", c.family}, {"attestations", c.attestations}, {"cases", c.cases}};
}

void from_json(const json& j, FamilyCertificate& c) {
  j.at("family").get_to(c.family);
  j.at("attestations").get_to(c.attestations);
  j.at("cases").get_to(c.cases);
}

void to_json(json& j, const Inapplicable& i) {
  j = json{{"case", i.case_id}, {"step", i.step}, {"detail", i.detail}};
}

void from_json(const json& j, Inapplicable& i) {
  j.at("case").get_to(i.case_id);
  j.at("step").get_to(i.step);
  j.at("detail").get_to(i.detail);
}

void to_json(json& j, const CertifyOutcome& o) {
  if (const auto* c = std::get_if<FamilyCertificate>(&o))
    j = json{{"status", "certified"}, {"certificate", *c}};
  else
    j = json{{"status", "inapplicable"}, {"inapplicable", std::get<Inapplicable>(o)}};
}

void from_json(const json& j, CertifyOutcome& o) {
  if (j.at("status").get<std::string>() == "certified")
    o = j.at("certificate").get<FamilyCertificate>();
  else
    o = j.at("inapplicable").get<Inapplicable>();
}

}  // namespace tistar
