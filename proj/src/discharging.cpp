#include "dlab/discharging.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dlab/structures.hpp"

namespace dlab {

std::string Element::str() const { return (kind == Vertex ? "v" : "f") + std::to_string(id); }

const Rational& ChargeLedger::initial(Element e) const {
  return e.kind == Element::Vertex ? initial_vertex.at(e.id) : initial_face.at(e.id);
}

const Rational& ChargeLedger::final_charge(Element e) const {
  return e.kind == Element::Vertex ? final_vertex.at(e.id) : final_face.at(e.id);
}

namespace {

Rational sum_of(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (const Rational& r : a) s += r;
  for (const Rational& r : b) s += r;
  return s;
}

Element vtx(Vertex v) { return {Element::Vertex, v}; }
Element fc(FaceId f) { return {Element::Face, f}; }

const Rational k1_3(1, 3), k1_4(1, 4), k2_3(2, 3), k1_2(1, 2), k3_8(3, 8), k1_6(1, 6), k1_24(1, 24),
    k5_24(5, 24), k4_3(4, 3), k1_12(1, 12);

class Matcher {
 public:
  explicit Matcher(const PlaneGraph& g) : g_(g) {}

  RuleMatches run() {
    r1();
    r2();
    r3();
    r4();
    r5();
    r6();
    return std::move(out_);
  }

 private:
  void give(const char* rule, Element from, Element to, const Rational& amount, std::optional<Element> via = {}) {
    out_.transfers.push_back({rule, from, to, amount, via});
  }
  void note(const char* rule, Element at, std::string msg) { out_.diagnostics.push_back({rule, at, std::move(msg)}); }

  int fsize(FaceId f) const { return g_.face(f).size(); }
  bool internal(Vertex v) const { return !g_.is_external(v); }

  // Face of each dart leaving v, in rotation order.
  std::vector<FaceId> slots(Vertex v) const {
    std::vector<FaceId> s;
    for (Vertex w : g_.rotation(v)) s.push_back(g_.face_of_dart(v, w));
    return s;
  }

  static bool distinct(std::vector<FaceId> s) {
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }

  void r1() {
    for (const Face& f : g_.faces()) {
      if (f.size() != 3 || f.id == g_.outer_face()) continue;
      for (Vertex v : f.boundary) give("R1", vtx(v), fc(f.id), k1_3);
    }
  }

  void r2() {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!internal(v) || g_.degree(v) != 3) continue;
      auto s = slots(v);
      if (!distinct(s)) {
        note("R2", vtx(v), "a face appears more than once around " + vtx(v).str());
        continue;
      }
      for (int i = 0; i < 3; ++i) {
        const Face& f = g_.face(s[i]);
        if (f.size() == 3) continue;
        if (!f.simple) {
          note("R2", fc(f.id), "face " + fc(f.id).str() + " has a non-simple boundary");
          continue;
        }
        if (f.size() == 5) {
          give("R2(1)", fc(f.id), vtx(v), k1_4);
          continue;
        }
        if (f.size() < 7) {
          note("R2", fc(f.id), "no amount for a " + std::to_string(f.size()) + "-face at internal 3-vertex " + vtx(v).str());
          continue;
        }
        int a = fsize(s[(i + 1) % 3]);
        int b = fsize(s[(i + 2) % 3]);
        if (a > b) std::swap(a, b);
        if (a == 3) give("R2(2)", fc(f.id), vtx(v), k2_3);
        else if (a == 5 && b == 5) give("R2(2)", fc(f.id), vtx(v), k1_2);
        else if (a == 5 && b >= 7) give("R2(2)", fc(f.id), vtx(v), k3_8);
        else if (a >= 7) give("R2(2)", fc(f.id), vtx(v), k1_3);
        else
          note("R2(2)", vtx(v),
               "no amount for other faces of sizes " + std::to_string(a) + "," + std::to_string(b) + " at " + vtx(v).str());
      }
    }
  }

  bool shares_edge(const Face& t, FaceId f) const {
    for (int i = 0; i < t.size(); ++i) {
      auto [p, q] = g_.faces_of_edge(t.boundary[i], t.boundary[(i + 1) % t.size()]);
      if (p == f || q == f) return true;
    }
    return false;
  }

  void r3() {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!internal(v) || g_.degree(v) != 4) continue;
      auto s = slots(v);
      if (!distinct(s)) {
        note("R3", vtx(v), "a face appears more than once around " + vtx(v).str());
        continue;
      }
      std::vector<FaceId> tri;
      for (FaceId f : s)
        if (fsize(f) == 3) tri.push_back(f);
      for (FaceId fid : s) {
        const Face& f = g_.face(fid);
        if (f.size() < 7) continue;
        if (!f.simple) {
          note("R3", fc(fid), "face " + fc(fid).str() + " has a non-simple boundary");
          continue;
        }
        if (tri.size() == 2) give("R3(1)", fc(fid), vtx(v), k1_3);
        else if (tri.size() == 1 && shares_edge(g_.face(tri[0]), fid)) give("R3(2)", fc(fid), vtx(v), k1_6);
      }
    }
  }

  FaceId other_face(Vertex a, Vertex b, FaceId not_this) const {
    auto [p, q] = g_.faces_of_edge(a, b);
    return p == not_this ? q : p;
  }

  void r4() {
    for (const Face& f : g_.faces()) {
      if (!is_light_7face(g_, f)) continue;
      std::set<FaceId> seen;
      for (int i = 0; i < 7; ++i) {
        Vertex p = f.boundary[i];
        Vertex q = f.boundary[(i + 1) % 7];
        FaceId tid = other_face(p, q, f.id);
        const Face& t = g_.face(tid);
        if (tid == f.id || t.size() != 3) continue;
        Vertex z = -1;
        for (Vertex w : t.boundary)
          if (w != p && w != q) z = w;
        if (g_.is_external(z) && seen.insert(tid).second) give("R4(2)", vtx(z), fc(f.id), k5_24, fc(tid));
        for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
          if (g_.degree(x) != 3) continue;
          if (g_.degree(y) >= 5) give("R4(1)", vtx(y), fc(f.id), k1_24);
          if (g_.degree(y) == 4 && internal(z) && g_.degree(z) >= 4) {
            FaceId h = other_face(y, z, tid);
            if (h != f.id && h != tid) give("R4(3)", fc(h), fc(f.id), k5_24, vtx(y));
          }
        }
      }
    }
  }

  void r5() {
    const Face& f0 = g_.face(g_.outer_face());
    std::vector<Vertex> vs = f0.boundary;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (Vertex v : vs) give("R5", fc(f0.id), vtx(v), k4_3);
  }

  void r6() {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (internal(v)) continue;
      for (FaceId fid : g_.faces_at(v)) {
        const Face& f = g_.face(fid);
        if (fid == g_.outer_face() || f.size() < 5) continue;
        if (!f.simple) {
          note("R6", fc(fid), "face " + fc(fid).str() + " has a non-simple boundary");
          continue;
        }
        const int d = g_.degree(v);
        if (d == 2) give("R6(1)", fc(fid), vtx(v), k2_3);
        else if (d == 3 && is_triangular_vertex(g_, v)) give("R6(2)", fc(fid), vtx(v), k1_12);
        else if (d == 3) give("R6(2)", vtx(v), fc(fid), k1_12);
        else if (d >= 4) give("R6(3)", vtx(v), fc(fid), k1_3);
      }
    }
  }

  const PlaneGraph& g_;
  RuleMatches out_;
};

}  // namespace

Rational ChargeLedger::initial_sum() const { return sum_of(initial_vertex, initial_face); }
Rational ChargeLedger::final_sum() const { return sum_of(final_vertex, final_face); }

ChargeLedger initial_charges(const PlaneGraph& g) {
  ChargeLedger l;
  l.outer_face = g.outer_face();
  for (Vertex v = 0; v < g.n(); ++v) l.initial_vertex.emplace_back(g.degree(v) - 4);
  for (const Face& f : g.faces()) l.initial_face.emplace_back(f.size() + (f.id == g.outer_face() ? 4 : -4));
  l.final_vertex = l.initial_vertex;
  l.final_face = l.initial_face;
  return l;
}

RuleMatches match_rules(const PlaneGraph& g) { return Matcher(g).run(); }

void settle(ChargeLedger& l) {
  l.final_vertex = l.initial_vertex;
  l.final_face = l.initial_face;
  auto slot = [&](Element e) -> Rational& { return e.kind == Element::Vertex ? l.final_vertex.at(e.id) : l.final_face.at(e.id); };
  for (const Transfer& t : l.transfers) {
    slot(t.source) -= t.amount;
    slot(t.sink) += t.amount;
  }
}

ChargeLedger apply_discharging(const PlaneGraph& g) {
  ChargeLedger l = initial_charges(g);
  RuleMatches m = match_rules(g);
  l.transfers = std::move(m.transfers);
  l.diagnostics = std::move(m.diagnostics);
  settle(l);
  return l;
}

const std::vector<Rational>& rule_constants() {
  static const std::vector<Rational> all{k1_3, k1_4, k2_3, k1_2, k3_8, k1_6, k1_24, k5_24, k4_3, k1_12};
  return all;
}

bool verify_conservation(const ChargeLedger& l) { return l.initial_sum().is_zero() && l.final_sum().is_zero(); }

NegativeReport negative_report(const PlaneGraph& g, const ChargeLedger& l) {
  NegativeReport r;
  for (Vertex v = 0; v < static_cast<int>(l.final_vertex.size()); ++v)
    if (l.final_vertex[v].sign() < 0) r.negatives.emplace_back(vtx(v), l.final_vertex[v]);
  for (FaceId f = 0; f < static_cast<int>(l.final_face.size()); ++f)
    if (l.final_face[f].sign() < 0) r.negatives.emplace_back(fc(f), l.final_face[f]);
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.is_external(v) && l.final_vertex[v].sign() > 0) r.positive_on_boundary.emplace_back(v, l.final_vertex[v]);
  return r;
}

}  // namespace dlab
