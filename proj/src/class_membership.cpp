#include "dlab/class_membership.hpp"

namespace dlab {

const char* to_string(GraphClass c) { return c == GraphClass::G ? "G" : "no-4-6-9"; }

const char* to_string(ClassReason r) {
  switch (r) {
    case ClassReason::FourCycle: return "4-cycle";
    case ClassReason::SixCycle: return "6-cycle";
    case ClassReason::NineCycle: return "9-cycle";
    case ClassReason::Special9Cycle: return "special 9-cycle";
  }
  return "?";
}

namespace {

void add(ClassReport& r, ClassReason reason, std::vector<Vertex> cycle, std::string detail, bool exhaustive) {
  if (!exhaustive) {
    for (const ClassWitness& w : r.witnesses)
      if (w.reason == reason) return;
  }
  r.witnesses.push_back({reason, std::move(cycle), std::move(detail)});
}

std::string special_detail(const CycleRecord& c) {
  for (const BadPartition& p : c.partitions) {
    if (p.kind == PartitionKind::Chord && p.signature == std::vector<int>{3, 8}) return "(3,8)-chord";
    if (p.kind == PartitionKind::Claw && p.signature == std::vector<int>{5, 5, 5}) return "(5,5,5)-claw";
  }
  return "";
}

}  // namespace

ClassReport check_class_G(const PlaneGraph& g, bool exhaustive) {
  ClassReport r;
  r.checked_class = GraphClass::G;
  r.exhaustive = exhaustive;
  for (auto& seq : enumerate_cycle_sequences(g, 9)) {
    const int len = static_cast<int>(seq.size());
    if (len == 4) add(r, ClassReason::FourCycle, std::move(seq), "", exhaustive);
    else if (len == 6) add(r, ClassReason::SixCycle, std::move(seq), "", exhaustive);
    else if (len == 9) {
      if (!exhaustive && !r.witnesses.empty() && r.witnesses.back().reason == ClassReason::Special9Cycle) continue;
      CycleRecord c = classify_cycle(g, seq);
      if (c.flags.special9) add(r, ClassReason::Special9Cycle, std::move(seq), special_detail(c), exhaustive);
    }
  }
  r.member = r.witnesses.empty();
  return r;
}

ClassReport check_theorem3_class(const PlaneGraph& g, bool exhaustive) {
  ClassReport r;
  r.checked_class = GraphClass::No469;
  r.exhaustive = exhaustive;
  for (auto& seq : enumerate_cycle_sequences(g, 9)) {
    const int len = static_cast<int>(seq.size());
    if (len == 4) add(r, ClassReason::FourCycle, std::move(seq), "", exhaustive);
    else if (len == 6) add(r, ClassReason::SixCycle, std::move(seq), "", exhaustive);
    else if (len == 9) add(r, ClassReason::NineCycle, std::move(seq), "", exhaustive);
  }
  r.member = r.witnesses.empty();
  return r;
}

}  // namespace dlab
