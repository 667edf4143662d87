#pragma once

#include <json.hpp>

#include "dlab/class_membership.hpp"
#include "dlab/coloring.hpp"
#include "dlab/configurations.hpp"
#include "dlab/discharging.hpp"
#include "dlab/structures.hpp"

namespace dlab {

using json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

// Rationals are written as "p/q" strings.
void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const Edge& e);
void from_json(const json& j, Edge& e);
void to_json(json& j, const Face& f);

void to_json(json& j, const BadPartition& p);
void from_json(const json& j, BadPartition& p);
void to_json(json& j, const CycleRecord& c);
void from_json(const json& j, CycleRecord& c);

void to_json(json& j, const ClassWitness& w);
void from_json(const json& j, ClassWitness& w);
void to_json(json& j, const ClassReport& r);
void from_json(const json& j, ClassReport& r);

void to_json(json& j, const Element& e);
void from_json(const json& j, Element& e);
void to_json(json& j, const Transfer& t);
void from_json(const json& j, Transfer& t);
void to_json(json& j, const Diagnostic& d);
void from_json(const json& j, Diagnostic& d);
void to_json(json& j, const ChargeLedger& l);
void from_json(const json& j, ChargeLedger& l);
void to_json(json& j, const NegativeReport& r);

void to_json(json& j, const Coloring& c);
void from_json(const json& j, Coloring& c);
void to_json(json& j, const ExtensionReport& r);
void from_json(const json& j, ExtensionReport& r);

void to_json(json& j, const AuditFinding& f);
void from_json(const json& j, AuditFinding& f);
void to_json(json& j, const ConditionReport& r);
void from_json(const json& j, ConditionReport& r);

// Top-level document: {"schema_version": 1, "kind": kind, ...body}.
json make_report(const std::string& kind, json body);

}  // namespace dlab
