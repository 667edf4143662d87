#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"
#include "dlab/rational.hpp"

namespace dlab {

struct Element {
  enum Kind { Vertex, Face } kind = Vertex;
  int id = 0;

  std::string str() const;  // "v3" or "f0" (0-based ids)
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct Transfer {
  std::string rule;  // "R1", "R2(2)", ...
  Element source;
  Element sink;
  Rational amount;
  std::optional<Element> via;
};

// A rule pattern the rule table has no amount for, or one skipped because a
// face involved has a non-simple boundary. Nothing is transferred.
struct Diagnostic {
  std::string rule;
  Element at;
  std::string message;
};

struct ChargeLedger {
  FaceId outer_face = 0;
  std::vector<Rational> initial_vertex;
  std::vector<Rational> initial_face;
  std::vector<Rational> final_vertex;
  std::vector<Rational> final_face;
  std::vector<Transfer> transfers;
  std::vector<Diagnostic> diagnostics;

  const Rational& initial(Element e) const;
  const Rational& final_charge(Element e) const;
  Rational initial_sum() const;
  Rational final_sum() const;
};

// ch(f0) = |f0| + 4, ch(v) = d(v) - 4, ch(f) = |f| - 4. Final charges equal
// the initial ones and there are no transfers.
ChargeLedger initial_charges(const PlaneGraph& g);

// Every rule instance of R1..R6 matched against the graph as given.
struct RuleMatches {
  std::vector<Transfer> transfers;
  std::vector<Diagnostic> diagnostics;
};
RuleMatches match_rules(const PlaneGraph& g);

// Recomputes the final charges from the initial ones and the transfers.
void settle(ChargeLedger& ledger);

ChargeLedger apply_discharging(const PlaneGraph& g);

// The rule constants; no other amount can appear in a transfer.
const std::vector<Rational>& rule_constants();

// Sum of initial and sum of final charges are both exactly zero.
bool verify_conservation(const ChargeLedger& ledger);

struct NegativeReport {
  std::vector<std::pair<Element, Rational>> negatives;
  std::vector<std::pair<Vertex, Rational>> positive_on_boundary;  // vertices of the outer face
};
NegativeReport negative_report(const PlaneGraph& g, const ChargeLedger& ledger);

}  // namespace dlab
