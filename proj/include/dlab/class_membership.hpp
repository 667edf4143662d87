#pragma once

#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"
#include "dlab/structures.hpp"

namespace dlab {

enum class GraphClass { G, No469 };
const char* to_string(GraphClass c);

enum class ClassReason { FourCycle, SixCycle, NineCycle, Special9Cycle };
const char* to_string(ClassReason r);

struct ClassWitness {
  ClassReason reason;
  std::vector<Vertex> cycle;  // canonical
  std::string detail;
};

struct ClassReport {
  GraphClass checked_class = GraphClass::G;
  bool member = true;
  bool exhaustive = false;
  std::vector<ClassWitness> witnesses;
};

// Connected plane graphs without 4-cycles, 6-cycles or special 9-cycles.
// Without `exhaustive`, only the first offending cycle per reason is listed.
ClassReport check_class_G(const PlaneGraph& g, bool exhaustive = false);
// No cycle of length 4, 6 or 9.
ClassReport check_theorem3_class(const PlaneGraph& g, bool exhaustive = false);

}  // namespace dlab
