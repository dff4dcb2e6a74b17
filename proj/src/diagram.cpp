#include "sapkit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace sapkit {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int SeifertData::pairMultiplicity(int crossing) const {
  int u = edges[crossing].underSource, v = edges[crossing].other;
  int m = 0;
  for (auto& e : edges) {
    if ((e.underSource == u && e.other == v) || (e.underSource == v && e.other == u)) ++m;
  }
  return m;
}

std::string PositivityClass::str() const {
  std::ostringstream s;
  switch (kind) {
    case PositivityKind::Positive: s << "Positive (GoodSAP k=0)"; break;
    case PositivityKind::AlmostPositiveI: s << "AlmostPositiveI (GoodSAP k=1)"; break;
    case PositivityKind::AlmostPositiveII: s << "AlmostPositiveII (SAP k=1)"; break;
    case PositivityKind::GoodSAP: s << "GoodSAP k=" << k; break;
    case PositivityKind::SAP: s << "SAP k=" << k; break;
    case PositivityKind::KAlmostPositive: s << "KAlmostPositive k=" << k; break;
    case PositivityKind::General: s << "General"; break;
  }
  return s.str();
}

Diagram::Diagram(std::vector<CrossingPD> pd, int freeLoops) : pd_(std::move(pd)), freeLoops_(freeLoops) {
  if (freeLoops_ < 0) throw TopologyError("negative free loop count");
  validateAndBuild();
}

Diagram Diagram::parsePD(const std::string& text) {
  std::vector<CrossingPD> pd;
  int loops = 0;
  std::optional<int> declaredComponents;
  size_t i = 0;
  auto skipWs = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skipWs();
  while (i < text.size()) {
    if (text[i] == '%') {
      size_t end = text.find('\n', i);
      std::string line = text.substr(i, end == std::string::npos ? std::string::npos : end - i);
      size_t colon = line.find(':');
      if (line.find("components") != std::string::npos && colon != std::string::npos) {
        declaredComponents = std::stoi(line.substr(colon + 1));
      }
      i = end == std::string::npos ? text.size() : end + 1;
    } else if (text[i] == 'O') {
      ++loops;
      ++i;
    } else if (text[i] == 'X') {
      ++i;
      skipWs();
      if (i >= text.size() || text[i] != '[') throw SyntaxError("expected '[' after X");
      ++i;
      CrossingPD x{};
      for (int k = 0; k < 4; ++k) {
        skipWs();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw SyntaxError("expected arc label");
        x[k] = std::stoi(text.substr(start, i - start));
        if (x[k] <= 0) throw SyntaxError("arc labels must be positive");
        skipWs();
        char expect = k < 3 ? ',' : ']';
        if (i >= text.size() || text[i] != expect)
          throw SyntaxError(std::string("expected '") + expect + "' in PD record");
        ++i;
      }
      pd.push_back(x);
    } else {
      throw SyntaxError("unexpected character '" + std::string(1, text[i]) + "'");
    }
    skipWs();
  }
  Diagram d(std::move(pd), loops);
  if (declaredComponents && *declaredComponents != d.componentCount())
    throw TopologyError("declared component count does not match diagram");
  return d;
}

std::string Diagram::toPD() const {
  std::vector<CrossingPD> sorted = pd_;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  bool first = true;
  for (auto& x : sorted) {
    if (!first) out << " ";
    out << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
    first = false;
  }
  for (int i = 0; i < freeLoops_; ++i) {
    if (!first) out << " ";
    out << "O";
    first = false;
  }
  return out.str();
}

int Diagram::succ(int arc) const {
  const Component& comp = components_[componentOf(arc)];
  return arc == comp.hi ? comp.lo : arc + 1;
}

int Diagram::pred(int arc) const {
  const Component& comp = components_[componentOf(arc)];
  return arc == comp.lo ? comp.hi : arc - 1;
}

int Diagram::componentOf(int arc) const {
  auto it = componentOfArc_.find(arc);
  if (it == componentOfArc_.end()) throw TopologyError("unknown arc label");
  return it->second;
}

void Diagram::validateAndBuild() {
  const int n = crossings();
  // Occurrence map; every label must occur exactly twice.
  std::map<int, std::vector<Occ>> occ;
  for (int x = 0; x < n; ++x)
    for (int p = 0; p < 4; ++p) occ[pd_[x][p]].push_back({x, p});
  for (auto& [arc, os] : occ)
    if (os.size() != 2)
      throw TopologyError("arc " + std::to_string(arc) + " appears " + std::to_string(os.size()) +
                          " times (must be 2)");

  // Component partition: under passage identifies positions 0/2, over 1/3.
  std::map<int, int> compIndex;
  {
    std::map<int, int> idx;
    int m = 0;
    for (auto& [arc, os] : occ) idx[arc] = m++;
    UnionFind uf(m);
    for (int x = 0; x < n; ++x) {
      uf.unite(idx[pd_[x][0]], idx[pd_[x][2]]);
      uf.unite(idx[pd_[x][1]], idx[pd_[x][3]]);
    }
    std::map<int, std::vector<int>> groups;
    for (auto& [arc, id] : occ) groups[uf.find(idx[arc])].push_back(arc);
    for (auto& [root, arcs] : groups) {
      Component comp;
      comp.lo = *std::min_element(arcs.begin(), arcs.end());
      comp.hi = *std::max_element(arcs.begin(), arcs.end());
      if (static_cast<int>(arcs.size()) != comp.hi - comp.lo + 1)
        throw TopologyError("component arc labels are not a contiguous range");
      for (int a = comp.lo; a <= comp.hi; ++a) {
        if (!occ.count(a)) throw TopologyError("arc label gap inside component");
        comp.arcs.push_back(a);
      }
      components_.push_back(comp);
    }
    std::sort(components_.begin(), components_.end(),
              [](const Component& a, const Component& b) { return a.lo < b.lo; });
    for (size_t ci = 0; ci < components_.size(); ++ci)
      for (int a : components_[ci].arcs) componentOfArc_[a] = static_cast<int>(ci);
    // Ranges must not overlap.
    for (size_t ci = 1; ci < components_.size(); ++ci)
      if (components_[ci].lo <= components_[ci - 1].hi)
        throw TopologyError("component arc ranges overlap");
    compIndex = componentOfArc_;
  }

  // Under-strand check and head/tail assignment by constraint propagation.
  signs_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    if (succ(pd_[x][0]) != pd_[x][2])
      throw TopologyError("under-strand of crossing " + std::to_string(x) +
                          " violates arc numbering");
  }
  // headAt[arc]: which occurrence (0/1) is the head; -1 = unknown.
  std::map<int, int> headAt;
  for (auto& [arc, os] : occ) headAt[arc] = -1;
  auto setHead = [&](int arc, const Occ& o) {
    auto& os = occ[arc];
    int which = os[0] == o ? 0 : 1;
    if (os[0] == o && os[1] == o) return;  // identical occurrences cannot happen (pos differ)
    if (headAt[arc] != -1 && headAt[arc] != which)
      throw TopologyError("arc " + std::to_string(arc) + " has conflicting orientations");
    headAt[arc] = which;
  };
  for (int x = 0; x < n; ++x) {
    setHead(pd_[x][0], {x, 0});
    // tail of pd_[x][2] at (x,2): record as "head is the other occurrence".
    auto& os = occ[pd_[x][2]];
    int which = (os[0] == Occ{x, 2}) ? 1 : 0;
    if (headAt[pd_[x][2]] != -1 && headAt[pd_[x][2]] != which)
      throw TopologyError("arc " + std::to_string(pd_[x][2]) + " has conflicting orientations");
    headAt[pd_[x][2]] = which;
  }
  // Propagate over-strand directions. sign +1: over enters at position 1.
  bool progress = true;
  auto tryResolve = [&](int x) -> bool {
    if (signs_[x] != 0) return false;
    int b = pd_[x][1], d = pd_[x][3];
    bool optBD = succ(b) == d;  // over b->d: head of b at (x,1), tail of d at (x,3)
    bool optDB = succ(d) == b;  // over d->b
    // Consult already-known arc orientations.
    auto consistent = [&](bool bd) {
      int inArc = bd ? b : d, outArc = bd ? d : b;
      Occ inOcc = bd ? Occ{x, 1} : Occ{x, 3};
      Occ outOcc = bd ? Occ{x, 3} : Occ{x, 1};
      if (headAt[inArc] != -1) {
        int which = occ[inArc][0] == inOcc ? 0 : 1;
        if (headAt[inArc] != which) return false;
      }
      if (headAt[outArc] != -1) {
        int which = occ[outArc][0] == outOcc ? 1 : 0;  // head is the other occurrence
        if (headAt[outArc] != which) return false;
      }
      return true;
    };
    if (optBD && !consistent(true)) optBD = false;
    if (optDB && !consistent(false)) optDB = false;
    if (!optBD && !optDB)
      throw TopologyError("over-strand of crossing " + std::to_string(x) +
                          " violates arc numbering");
    if (optBD && optDB) return false;  // still ambiguous
    signs_[x] = optBD ? +1 : -1;
    int inArc = optBD ? b : d, outArc = optBD ? d : b;
    setHead(inArc, optBD ? Occ{x, 1} : Occ{x, 3});
    auto& os = occ[outArc];
    Occ outOcc = optBD ? Occ{x, 3} : Occ{x, 1};
    int which = (os[0] == outOcc) ? 1 : 0;
    if (headAt[outArc] != -1 && headAt[outArc] != which)
      throw TopologyError("arc " + std::to_string(outArc) + " has conflicting orientations");
    headAt[outArc] = which;
    return true;
  };
  while (progress) {
    progress = false;
    for (int x = 0; x < n; ++x) progress |= tryResolve(x);
    if (!progress) {
      // Genuine ambiguity (two-arc components passing only over): pick the
      // lowest unresolved crossing and read its over-strand as 1 -> 3.
      for (int x = 0; x < n; ++x) {
        if (signs_[x] == 0) {
          signs_[x] = +1;
          setHead(pd_[x][1], {x, 1});
          auto& os = occ[pd_[x][3]];
          int which = (os[0] == Occ{x, 3}) ? 1 : 0;
          headAt[pd_[x][3]] = which;
          progress = true;
          break;
        }
      }
      if (!progress) break;
    }
  }
  for (int x = 0; x < n; ++x)
    if (signs_[x] == 0) throw TopologyError("unresolved crossing orientation");
  for (auto& [arc, which] : headAt) {
    if (which == -1) throw TopologyError("unoriented arc " + std::to_string(arc));
    head_[arc] = occ[arc][which];
    tail_[arc] = occ[arc][1 - which];
  }
  // Every arc needs one head and one tail occurrence; heads were assigned, so
  // check the implied under/over structure is a bijection: each crossing has
  // exactly one incoming and one outgoing occurrence per strand, which the
  // succ checks above plus head assignment already guarantee.

  buildFaces();
  buildSeifert();
  buildRegions();
}

void Diagram::buildFaces() {
  const int n = crossings();
  cornerFace_.assign(n, {-1, -1, -1, -1});
  faceCorners_.clear();
  faceCount_ = 0;
  // Directed edge = arrival at (crossing, pos) along arc pd_[x][p]. The face
  // trace turns to position p+1 and departs along that arc toward its other
  // occurrence.
  auto otherOcc = [&](int x, int p) -> Occ {
    int arc = pd_[x][p];
    Occ h = head_.at(arc), t = tail_.at(arc);
    if (h.crossing == x && h.pos == p) return t;
    return h;
  };
  for (int x0 = 0; x0 < n; ++x0) {
    for (int p0 = 0; p0 < 4; ++p0) {
      if (cornerFace_[x0][p0] != -1) continue;
      int f = faceCount_++;
      faceCorners_.emplace_back();
      int x = x0, p = p0;
      do {
        cornerFace_[x][p] = f;
        faceCorners_[f].push_back({x, p});
        int q = (p + 1) % 4;
        Occ nxt = otherOcc(x, q);
        x = nxt.crossing;
        p = nxt.pos;
      } while (!(x == x0 && p == p0));
    }
  }
  // Planarity: Euler characteristic per connected component of the map.
  if (n > 0) {
    UnionFind uf(n);
    for (int x = 0; x < n; ++x)
      for (int p = 0; p < 4; ++p) {
        Occ o = otherOcc(x, p);
        uf.unite(x, o.crossing);
      }
    std::map<int, std::array<int, 3>> vef;  // root -> (V, E-ends, F marker via set later)
    std::map<int, std::set<int>> facesBy;
    for (int x = 0; x < n; ++x) {
      vef[uf.find(x)][0]++;
      for (int p = 0; p < 4; ++p) {
        vef[uf.find(x)][1]++;  // counts edge ends; E = ends / 2
        facesBy[uf.find(x)].insert(cornerFace_[x][p]);
      }
    }
    for (auto& [root, counts] : vef) {
      int V = counts[0], E = counts[1] / 2;
      int F = static_cast<int>(facesBy[root].size());
      if (V - E + F != 2) throw TopologyError("rotation system is not planar (V-E+F != 2)");
    }
  }
}

void Diagram::buildSeifert() {
  seifert_ = SeifertData{};
  const int n = crossings();
  // Seifert successor: at the head of an arc, continue on the strand exiting
  // the same side of the oriented smoothing (under-in -> over-out, over-in ->
  // under-out).
  std::map<int, int> next;
  for (auto& [arc, h] : head_) {
    int x = h.crossing;
    if (h.pos == 0) {
      next[arc] = pd_[x][overOutPos(x)];
    } else {
      next[arc] = pd_[x][2];
    }
  }
  std::map<int, int> circleOf;
  for (auto& [arc, h] : head_) {
    if (circleOf.count(arc)) continue;
    int id = static_cast<int>(seifert_.circles.size());
    seifert_.circles.emplace_back();
    int a = arc;
    while (!circleOf.count(a)) {
      circleOf[a] = id;
      seifert_.circles[id].push_back(a);
      a = next[a];
    }
  }
  seifert_.circleOfArc = circleOf;
  seifert_.edges.resize(n);
  for (int x = 0; x < n; ++x) {
    seifert_.edges[x].underSource = circleOf[pd_[x][0]];
    seifert_.edges[x].other = circleOf[pd_[x][overInPos(x)]];
    seifert_.edges[x].sign = signs_[x];
  }
  // Feet in traversal order: walking a circle, we pass the head crossing of
  // each arc.
  seifert_.feet.resize(seifert_.circles.size());
  for (size_t ci = 0; ci < seifert_.circles.size(); ++ci)
    for (int a : seifert_.circles[ci]) seifert_.feet[ci].push_back(head_.at(a).crossing);
  // Free loops appear as extra circles with no arcs.
  for (int i = 0; i < freeLoops_; ++i) {
    seifert_.circles.emplace_back();
    seifert_.feet.emplace_back();
  }
}

void Diagram::buildRegions() {
  const int n = crossings();
  regionOfFace_.assign(faceCount_, 0);
  parentRegion_.clear();
  childRegion_.clear();
  rho_.clear();
  bandRegion_.assign(n, -1);
  regionDepth_.clear();
  regionCount_ = 0;
  outerRegion_ = 0;
  if (n == 0) return;

  UnionFind uf(faceCount_);
  for (int x = 0; x < n; ++x) {
    if (signs_[x] > 0)
      uf.unite(cornerFace_[x][0], cornerFace_[x][2]);
    else
      uf.unite(cornerFace_[x][1], cornerFace_[x][3]);
  }
  std::map<int, int> regionId;
  for (int f = 0; f < faceCount_; ++f) {
    int r = uf.find(f);
    if (!regionId.count(r)) regionId[r] = regionCount_++;
    regionOfFace_[f] = regionId[r];
  }
  for (int x = 0; x < n; ++x) {
    int inCorner = signs_[x] > 0 ? 0 : 1;
    bandRegion_[x] = regionOfFace_[cornerFace_[x][inCorner]];
  }

  // Side regions per circle (consistency asserts the construction).
  int nCircles = static_cast<int>(seifert_.circles.size());
  std::vector<int> leftRegion(nCircles, -1), rightRegion(nCircles, -1);
  for (int ci = 0; ci < nCircles; ++ci) {
    for (int a : seifert_.circles[ci]) {
      int lf = regionOfFace_[leftFace(a)];
      int rf = regionOfFace_[rightFace(a)];
      if (leftRegion[ci] == -1) {
        leftRegion[ci] = lf;
        rightRegion[ci] = rf;
      } else if (leftRegion[ci] != lf || rightRegion[ci] != rf) {
        throw TopologyError("inconsistent circle side regions");
      }
    }
  }

  // Root the region tree at the region right of the lowest arc.
  int lowestArc = components_.empty() ? -1 : components_[0].lo;
  outerRegion_ = regionOfFace_[rightFace(lowestArc)];
  regionDepth_.assign(regionCount_, -1);
  parentRegion_.assign(nCircles, -1);
  childRegion_.assign(nCircles, -1);
  rho_.assign(nCircles, 0);
  // BFS over the region tree (regions as nodes, circles as edges).
  std::vector<std::vector<std::pair<int, int>>> adj(regionCount_);  // (otherRegion, circle)
  for (int ci = 0; ci < nCircles; ++ci) {
    if (seifert_.circles[ci].empty()) continue;  // free loop: not part of the map
    adj[leftRegion[ci]].push_back({rightRegion[ci], ci});
    adj[rightRegion[ci]].push_back({leftRegion[ci], ci});
  }
  std::vector<int> queue{outerRegion_};
  regionDepth_[outerRegion_] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int r = queue[qi];
    for (auto& [other, ci] : adj[r]) {
      if (regionDepth_[other] != -1) continue;
      regionDepth_[other] = regionDepth_[r] + 1;
      parentRegion_[ci] = r;
      childRegion_[ci] = other;
      rho_[ci] = (leftRegion[ci] == other) ? +1 : -1;
      queue.push_back(other);
    }
  }
  // In a disconnected map some regions stay unreached; handled by callers
  // that require connectivity. For circles whose regions were both reached
  // before their own edge (impossible in a tree), nothing to fix: the region
  // adjacency of disjoint circles on the sphere is always a tree per
  // connected component.
  for (int ci = 0; ci < nCircles; ++ci) {
    if (seifert_.circles[ci].empty()) continue;
    if (parentRegion_[ci] == -1) {
      // Circle in a component not containing the outer region (split
      // diagram). Root that component arbitrarily at its lowest region.
      // Depth bookkeeping continues from 0.
      int l = leftRegion[ci], r = rightRegion[ci];
      if (regionDepth_[l] == -1 && regionDepth_[r] == -1) {
        regionDepth_[l] = 0;
        std::vector<int> q2{l};
        for (size_t qi = 0; qi < q2.size(); ++qi) {
          int rr = q2[qi];
          for (auto& [other, cj] : adj[rr]) {
            if (regionDepth_[other] != -1) continue;
            regionDepth_[other] = regionDepth_[rr] + 1;
            parentRegion_[cj] = rr;
            childRegion_[cj] = other;
            rho_[cj] = (leftRegion[cj] == other) ? +1 : -1;
            q2.push_back(other);
          }
        }
      }
      if (parentRegion_[ci] == -1) {
        parentRegion_[ci] = leftRegion[ci];
        childRegion_[ci] = rightRegion[ci];
        rho_[ci] = -1;
      }
    }
  }
}

int Diagram::leftFace(int arc) const {
  Occ h = head_.at(arc);
  return cornerFace_[h.crossing][h.pos];
}

int Diagram::rightFace(int arc) const {
  Occ t = tail_.at(arc);
  return cornerFace_[t.crossing][t.pos];
}

DiagramStats Diagram::stats() const {
  DiagramStats st;
  st.c = crossings();
  for (int s : signs_) (s > 0 ? st.cPlus : st.cMinus)++;
  st.w = st.cPlus - st.cMinus;
  st.s = static_cast<int>(seifert_.circles.size());
  st.chi = st.s - st.c;
  if (isKnot()) st.genus = (1 - st.chi) / 2;
  return st;
}

CheckerboardData Diagram::checkerboard() const {
  if (!isConnected()) throw DisconnectedDiagram("checkerboard census requires a connected diagram");
  CheckerboardData cb;
  const int n = crossings();
  cb.faceColor.assign(faceCount_, -1);
  // BFS 2-coloring; faces adjacent along an arc get opposite colors. Seed:
  // the face left of the lowest arc is white (0).
  int lowestArc = components_[0].lo;
  std::vector<int> queue{leftFace(lowestArc)};
  cb.faceColor[leftFace(lowestArc)] = 0;
  // adjacency via arcs
  std::map<int, std::vector<int>> faceAdj;
  for (auto& [arc, h] : head_) {
    faceAdj[leftFace(arc)].push_back(rightFace(arc));
    faceAdj[rightFace(arc)].push_back(leftFace(arc));
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    for (int g : faceAdj[f]) {
      if (cb.faceColor[g] == -1) {
        cb.faceColor[g] = 1 - cb.faceColor[f];
        queue.push_back(g);
      } else if (cb.faceColor[g] == cb.faceColor[f]) {
        throw TopologyError("faces are not checkerboard colorable");
      }
    }
  }

  cb.crossingTypes.resize(n);
  for (int x = 0; x < n; ++x) {
    bool blackAt0 = cb.faceColor[cornerFace_[x][0]] == 1;
    // Type a: black at corners 0 and 2. Positive crossings are IIa or Ib,
    // negative Ia or IIb (the eq. (2) pairing).
    if (signs_[x] > 0)
      cb.crossingTypes[x] = blackAt0 ? CrossingType::IIa : CrossingType::Ib;
    else
      cb.crossingTypes[x] = blackAt0 ? CrossingType::Ia : CrossingType::IIb;
    switch (cb.crossingTypes[x]) {
      case CrossingType::Ia: cb.cIa++; break;
      case CrossingType::Ib: cb.cIb++; break;
      case CrossingType::IIa: cb.cIIa++; break;
      case CrossingType::IIb: cb.cIIb++; break;
    }
  }
  cb.eHalfBlack = cb.cIIb - cb.cIIa;
  cb.eHalfWhite = cb.cIa - cb.cIb;

  auto isTypeA = [&](int x) {
    return cb.crossingTypes[x] == CrossingType::Ia || cb.crossingTypes[x] == CrossingType::IIa;
  };
  for (int f = 0; f < faceCount_; ++f) {
    int alpha = 0, beta = 0;
    for (auto& [x, k] : faceCorners_[f]) (isTypeA(x) ? alpha : beta)++;
    if (cb.faceColor[f] == 0) {
      cb.censusWhite[{alpha, beta}]++;
      cb.whiteRegions++;
      if (alpha > beta) cb.gammaWPos++;
    } else {
      cb.censusBlack[{alpha, beta}]++;
      cb.blackRegions++;
      if (beta > alpha) cb.gammaBPos++;
    }
  }

  // Seifert circles bounding a white / black bigon: a 2-corner face whose two
  // boundary arcs form a full Seifert circle.
  std::set<int> whiteCircles, blackCircles;
  for (int f = 0; f < faceCount_; ++f) {
    if (faceCorners_[f].size() != 2) continue;
    std::set<int> arcs;
    for (auto& [x, k] : faceCorners_[f]) arcs.insert(pd_[x][(k + 1) % 4]);
    if (arcs.size() != 2) continue;
    int a = *arcs.begin();
    int ci = seifert_.circleOfArc.at(a);
    std::set<int> circleArcs(seifert_.circles[ci].begin(), seifert_.circles[ci].end());
    if (circleArcs == arcs) (cb.faceColor[f] == 0 ? whiteCircles : blackCircles).insert(ci);
  }
  cb.sW = static_cast<int>(whiteCircles.size());
  cb.sB = static_cast<int>(blackCircles.size());
  return cb;
}

PositivityClass Diagram::classifyPositivity() const {
  PositivityClass pc;
  std::vector<int> negatives;
  for (int x = 0; x < crossings(); ++x)
    if (signs_[x] < 0) negatives.push_back(x);
  pc.k = static_cast<int>(negatives.size());
  if (pc.k == 0) {
    pc.kind = PositivityKind::Positive;
    return pc;
  }

  // Goodness: every negative crossing is the unique crossing joining its two
  // Seifert circles.
  bool good = true;
  for (int x : negatives)
    if (seifert_.pairMultiplicity(x) != 1) good = false;

  // SAP detection: some directed overarc passes over exactly the k negative
  // crossings consecutively with no other crossing touching it in between.
  auto trySAPFrom = [&](int firstNeg) -> std::optional<std::pair<std::vector<int>, int>> {
    // The overarc enters firstNeg as the over-strand along arc `inArc`.
    int inArc = pd_[firstNeg][overInPos(firstNeg)];
    std::vector<int> seen{firstNeg};
    std::set<int> seenSet{firstNeg};
    int arc = pd_[firstNeg][overOutPos(firstNeg)];
    while (static_cast<int>(seen.size()) < pc.k) {
      Occ h = head_.at(arc);
      int x = h.crossing;
      if (signs_[x] >= 0) return std::nullopt;       // touched a positive crossing
      if (h.pos == 0) return std::nullopt;           // passes under: not an overarc
      if (seenSet.count(x)) return std::nullopt;     // revisits a negative crossing
      seen.push_back(x);
      seenSet.insert(x);
      arc = pd_[x][overOutPos(x)];
    }
    return std::make_pair(seen, inArc);
  };
  for (int x : negatives) {
    auto r = trySAPFrom(x);
    if (r) {
      pc.overarcCrossings = r->first;
      pc.baseArc = r->second;
      if (pc.k == 1)
        pc.kind = good ? PositivityKind::AlmostPositiveI : PositivityKind::AlmostPositiveII;
      else
        pc.kind = good ? PositivityKind::GoodSAP : PositivityKind::SAP;
      return pc;
    }
  }
  pc.kind = PositivityKind::KAlmostPositive;
  return pc;
}

bool Diagram::isReduced() const {
  for (int x = 0; x < crossings(); ++x) {
    if (cornerFace_[x][0] == cornerFace_[x][2] || cornerFace_[x][1] == cornerFace_[x][3])
      return false;
  }
  return true;
}

bool Diagram::isConnected() const {
  if (crossings() == 0) return componentCount() <= 1;
  if (freeLoops_ > 0) return false;
  UnionFind uf(crossings());
  for (auto& [arc, h] : head_) uf.unite(h.crossing, tail_.at(arc).crossing);
  int root = uf.find(0);
  for (int x = 0; x < crossings(); ++x)
    if (uf.find(x) != root) return false;
  return true;
}

bool Diagram::isSplit() const {
  if (componentCount() <= 1) return false;
  return !isConnected();
}

std::vector<Diagram> Diagram::splitComponents() const {
  std::vector<Diagram> out;
  if (crossings() > 0) {
    UnionFind uf(crossings());
    for (auto& [arc, h] : head_) uf.unite(h.crossing, tail_.at(arc).crossing);
    std::map<int, std::vector<CrossingPD>> groups;
    for (int x = 0; x < crossings(); ++x) groups[uf.find(x)].push_back(pd_[x]);
    for (auto& [root, pds] : groups) out.push_back(Diagram(pds, 0));
  }
  for (int i = 0; i < freeLoops_; ++i) out.push_back(Diagram({}, 1));
  return out;
}

Diagram Diagram::relabeled(const std::map<int, int>& perm) const {
  std::vector<CrossingPD> npd = pd_;
  for (auto& x : npd)
    for (int p = 0; p < 4; ++p) x[p] = perm.at(x[p]);
  return Diagram(npd, freeLoops_);
}

}  // namespace sapkit
