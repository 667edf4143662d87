#include "dlab/report.hpp"

#include <stdexcept>

namespace dlab {

namespace {

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& s, const Enum (&all)[N]) {
  for (Enum e : all)
    if (s == to_string(e)) return e;
  throw std::invalid_argument("unknown enum value: " + s);
}

constexpr PartitionKind partition_kinds[] = {PartitionKind::Chord, PartitionKind::Claw, PartitionKind::Biclaw,
                                             PartitionKind::Triclaw};
constexpr ClassReason class_reasons[] = {ClassReason::FourCycle, ClassReason::SixCycle, ClassReason::NineCycle,
                                         ClassReason::Special9Cycle};
constexpr GraphClass graph_classes[] = {GraphClass::G, GraphClass::No469};
constexpr AuditCheck audit_checks[] = {
    AuditCheck::MinDegree,         AuditCheck::TwoConnected,    AuditCheck::SeparatingGoodCycle,
    AuditCheck::NonFacialSmallCycle, AuditCheck::BadCycleCatalog, AuditCheck::TriangularBadCycle,
    AuditCheck::SplittingPathFace, AuditCheck::GoodPathOnFace,  AuditCheck::AllThreeFace,
    AuditCheck::LightSevenPair,    AuditCheck::ChordedEight,    AuditCheck::NineFaceConfig,
};

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }
void from_json(const json& j, Rational& r) { r = Rational::from_string(j.get<std::string>()); }

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }
void from_json(const json& j, Edge& e) { e = {j.at(0).get<Vertex>(), j.at(1).get<Vertex>()}; }

void to_json(json& j, const Face& f) { j = {{"id", f.id}, {"boundary", f.boundary}, {"simple", f.simple}}; }

void to_json(json& j, const BadPartition& p) {
  j = {{"kind", to_string(p.kind)}, {"signature", p.signature}, {"anchors", p.anchors},
       {"legs", p.legs},           {"cells", p.cells}};
}
void from_json(const json& j, BadPartition& p) {
  p.kind = enum_from(j.at("kind").get<std::string>(), partition_kinds);
  j.at("signature").get_to(p.signature);
  j.at("anchors").get_to(p.anchors);
  j.at("legs").get_to(p.legs);
  j.at("cells").get_to(p.cells);
}

void to_json(json& j, const CycleRecord& c) {
  std::vector<std::vector<Vertex>> tris;
  for (const Triangle& t : c.adjacent_triangles) tris.push_back({t[0], t[1], t[2]});
  j = {{"vertices", c.vertices},
       {"length", c.length},
       {"interior", c.interior},
       {"exterior", c.exterior},
       {"facial", c.flags.facial},
       {"separating", c.flags.separating},
       {"good", c.flags.good},
       {"bad", c.flags.bad},
       {"special9", c.flags.special9},
       {"triangular", c.flags.triangular},
       {"ext_triangular", c.flags.ext_triangular},
       {"adjacent_triangles", tris},
       {"partitions", c.partitions}};
}
void from_json(const json& j, CycleRecord& c) {
  j.at("vertices").get_to(c.vertices);
  j.at("length").get_to(c.length);
  j.at("interior").get_to(c.interior);
  j.at("exterior").get_to(c.exterior);
  j.at("facial").get_to(c.flags.facial);
  j.at("separating").get_to(c.flags.separating);
  j.at("good").get_to(c.flags.good);
  j.at("bad").get_to(c.flags.bad);
  j.at("special9").get_to(c.flags.special9);
  j.at("triangular").get_to(c.flags.triangular);
  j.at("ext_triangular").get_to(c.flags.ext_triangular);
  c.adjacent_triangles.clear();
  for (const auto& t : j.at("adjacent_triangles")) c.adjacent_triangles.push_back({t.at(0), t.at(1), t.at(2)});
  j.at("partitions").get_to(c.partitions);
}

void to_json(json& j, const ClassWitness& w) {
  j = {{"reason", to_string(w.reason)}, {"cycle", w.cycle}, {"detail", w.detail}};
}
void from_json(const json& j, ClassWitness& w) {
  w.reason = enum_from(j.at("reason").get<std::string>(), class_reasons);
  j.at("cycle").get_to(w.cycle);
  j.at("detail").get_to(w.detail);
}
void to_json(json& j, const ClassReport& r) {
  j = {{"class", to_string(r.checked_class)},
       {"member", r.member},
       {"exhaustive", r.exhaustive},
       {"witnesses", r.witnesses}};
}
void from_json(const json& j, ClassReport& r) {
  r.checked_class = enum_from(j.at("class").get<std::string>(), graph_classes);
  j.at("member").get_to(r.member);
  j.at("exhaustive").get_to(r.exhaustive);
  j.at("witnesses").get_to(r.witnesses);
}

void to_json(json& j, const Element& e) { j = e.str(); }
void from_json(const json& j, Element& e) {
  const std::string s = j.get<std::string>();
  if (s.size() < 2 || (s[0] != 'v' && s[0] != 'f')) throw std::invalid_argument("bad element: " + s);
  e.kind = s[0] == 'v' ? Element::Vertex : Element::Face;
  e.id = std::stoi(s.substr(1));
}
void to_json(json& j, const Transfer& t) {
  j = {{"rule", t.rule}, {"source", t.source}, {"sink", t.sink}, {"amount", t.amount}};
  if (t.via) j["via"] = *t.via;
}
void from_json(const json& j, Transfer& t) {
  j.at("rule").get_to(t.rule);
  j.at("source").get_to(t.source);
  j.at("sink").get_to(t.sink);
  j.at("amount").get_to(t.amount);
  t.via.reset();
  if (j.contains("via")) t.via = j.at("via").get<Element>();
}
void to_json(json& j, const Diagnostic& d) { j = {{"rule", d.rule}, {"at", d.at}, {"message", d.message}}; }
void from_json(const json& j, Diagnostic& d) {
  j.at("rule").get_to(d.rule);
  j.at("at").get_to(d.at);
  j.at("message").get_to(d.message);
}
void to_json(json& j, const ChargeLedger& l) {
  j = {{"outer_face", l.outer_face},
       {"initial_vertex", l.initial_vertex},
       {"initial_face", l.initial_face},
       {"final_vertex", l.final_vertex},
       {"final_face", l.final_face},
       {"transfers", l.transfers},
       {"diagnostics", l.diagnostics},
       {"initial_sum", l.initial_sum()},
       {"final_sum", l.final_sum()}};
}
void from_json(const json& j, ChargeLedger& l) {
  j.at("outer_face").get_to(l.outer_face);
  j.at("initial_vertex").get_to(l.initial_vertex);
  j.at("initial_face").get_to(l.initial_face);
  j.at("final_vertex").get_to(l.final_vertex);
  j.at("final_face").get_to(l.final_face);
  j.at("transfers").get_to(l.transfers);
  j.at("diagnostics").get_to(l.diagnostics);
}
void to_json(json& j, const NegativeReport& r) {
  json neg = json::array(), pos = json::array();
  for (const auto& [e, q] : r.negatives) neg.push_back({{"element", e}, {"charge", q}});
  for (const auto& [v, q] : r.positive_on_boundary) pos.push_back({{"vertex", v}, {"charge", q}});
  j = {{"negatives", neg}, {"positive_on_boundary", pos}};
}

void to_json(json& j, const Coloring& c) { j = {{"colors", c.colors}, {"partial", c.partial}}; }
void from_json(const json& j, Coloring& c) {
  j.at("colors").get_to(c.colors);
  j.at("partial").get_to(c.partial);
}
void to_json(json& j, const ExtensionReport& r) {
  j = {{"boundary", r.boundary},
       {"boundary_good", r.boundary_good},
       {"graph_in_G", r.graph_in_G},
       {"hypothesis_holds", r.hypothesis_holds},
       {"total", r.total},
       {"extendable", r.extendable},
       {"non_extendable", r.non_extendable()},
       {"witnesses", r.witnesses}};
}
void from_json(const json& j, ExtensionReport& r) {
  j.at("boundary").get_to(r.boundary);
  j.at("boundary_good").get_to(r.boundary_good);
  j.at("graph_in_G").get_to(r.graph_in_G);
  j.at("hypothesis_holds").get_to(r.hypothesis_holds);
  j.at("total").get_to(r.total);
  j.at("extendable").get_to(r.extendable);
  j.at("witnesses").get_to(r.witnesses);
}

void to_json(json& j, const AuditFinding& f) {
  j = {{"check", to_string(f.check)}, {"vertices", f.vertices}, {"faces", f.faces}, {"detail", f.detail}};
}
void from_json(const json& j, AuditFinding& f) {
  f.check = enum_from(j.at("check").get<std::string>(), audit_checks);
  j.at("vertices").get_to(f.vertices);
  j.at("faces").get_to(f.faces);
  j.at("detail").get_to(f.detail);
}
void to_json(json& j, const ConditionReport& r) {
  j = {{"keeps_boundary", r.keeps_boundary}, {"no_short_cycle", r.no_short_cycle}};
  j["edge_free"] = r.edge_free ? json(*r.edge_free) : json(nullptr);
  j["passed"] = r.passed;
  j["created"] = r.created;
  j["notes"] = r.notes;
  j["parts"] = json::array();
  for (const ConditionReport& p : r.parts) j["parts"].push_back(p);
}
void from_json(const json& j, ConditionReport& r) {
  j.at("keeps_boundary").get_to(r.keeps_boundary);
  j.at("no_short_cycle").get_to(r.no_short_cycle);
  r.edge_free.reset();
  if (!j.at("edge_free").is_null()) r.edge_free = j.at("edge_free").get<bool>();
  j.at("passed").get_to(r.passed);
  j.at("created").get_to(r.created);
  j.at("notes").get_to(r.notes);
  r.parts.clear();
  for (const auto& p : j.at("parts")) r.parts.push_back(p.get<ConditionReport>());
}

json make_report(const std::string& kind, json body) {
  json j = {{"schema_version", report_schema_version}, {"kind", kind}};
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j;
}

}  // namespace dlab
