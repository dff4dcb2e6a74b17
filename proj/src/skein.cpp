#include "sapkit/skein.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <map>
#include <set>
#include <sstream>

#include "sapkit/transforms.hpp"

namespace sapkit {

namespace {

// Bounded memo cache with least-recently-used eviction.
template <typename V>
class LruCache {
 public:
  explicit LruCache(size_t cap) : cap_(cap) {}
  const V* get(const std::string& k) {
    auto it = index_.find(k);
    if (it == index_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second);
    return &it->second->second;
  }
  void put(const std::string& k, V v) {
    auto it = index_.find(k);
    if (it != index_.end()) {
      it->second->second = std::move(v);
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(k, std::move(v));
    index_[k] = order_.begin();
    if (index_.size() > cap_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

 private:
  size_t cap_;
  std::list<std::pair<std::string, V>> order_;
  std::map<std::string, typename std::list<std::pair<std::string, V>>::iterator> index_;
};

}  // namespace

BasedDiagram BasedDiagram::canonical(const Diagram& d) {
  BasedDiagram bd{d, {}};
  for (auto& comp : d.components()) bd.baseArcs.push_back(comp.lo);
  return bd;
}

BasedDiagram BasedDiagram::standard(const Diagram& d) {
  PositivityClass pc = d.classifyPositivity();
  if (pc.isSAP() && pc.baseArc >= 0) {
    BasedDiagram bd{d, {pc.baseArc}};
    int baseComp = d.componentOf(pc.baseArc);
    for (size_t ci = 0; ci < d.components().size(); ++ci)
      if (static_cast<int>(ci) != baseComp) bd.baseArcs.push_back(d.components()[ci].lo);
    return bd;
  }
  return canonical(d);
}

std::string BasedDiagram::canonicalKey() const {
  // Relabel arcs: component k (walk order) numbered consecutively from its
  // base arc. Crossings serialized sorted.
  std::map<int, int> relabel;
  int next = 1;
  for (int base : baseArcs) {
    int a = base;
    do {
      relabel[a] = next++;
      a = d.succ(a);
    } while (a != base);
  }
  std::vector<CrossingPD> pd = d.pd();
  for (auto& x : pd)
    for (int p = 0; p < 4; ++p) x[p] = relabel.at(x[p]);
  std::sort(pd.begin(), pd.end());
  std::ostringstream out;
  for (auto& x : pd) out << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ";";
  out << "L" << d.freeLoops();
  return out.str();
}

FirstNonDescending firstNonDescending(const BasedDiagram& bd) {
  const Diagram& d = bd.d;
  std::set<int> visited;
  for (int base : bd.baseArcs) {
    int a = base;
    do {
      Occ h = d.head(a);
      if (!visited.count(h.crossing)) {
        if (h.pos == 0) {
          // first reached as under-strand: non-descending
          return {h.crossing, static_cast<int>(visited.size())};
        }
        visited.insert(h.crossing);
      }
      a = d.succ(a);
    } while (a != base);
  }
  return {std::nullopt, d.crossings()};
}

namespace {

// Based smoothing with the base-point inheritance rules: merging forgets the
// absorbed component's base point; splitting keeps the old base on its part
// and gives the new part a base on the outgoing merged arc at the crossing.
BasedDiagram smoothBased(const BasedDiagram& bd, int crossing) {
  const Diagram& d = bd.d;
  int underIn = d.pd()[crossing][0];
  int overIn = d.pd()[crossing][d.overInPos(crossing)];
  int compU = d.componentOf(underIn);
  int compO = d.componentOf(overIn);

  SurgeryResult sr = smoothOriented(d, crossing);
  BasedDiagram out{sr.diagram, {}};

  auto mappedBase = [&](int oldArc) -> std::optional<int> {
    auto it = sr.arcMap.find(oldArc);
    if (it == sr.arcMap.end()) return std::nullopt;  // absorbed into a free loop
    return it->second;
  };

  if (compU != compO) {
    // Merge: drop the later walk entry of the two merged components.
    int iU = -1, iO = -1;
    for (size_t k = 0; k < bd.baseArcs.size(); ++k) {
      int comp = d.componentOf(bd.baseArcs[k]);
      if (comp == compU) iU = static_cast<int>(k);
      if (comp == compO) iO = static_cast<int>(k);
    }
    int drop = std::max(iU, iO);
    for (size_t k = 0; k < bd.baseArcs.size(); ++k) {
      if (static_cast<int>(k) == drop) continue;
      auto nb = mappedBase(bd.baseArcs[k]);
      if (nb) out.baseArcs.push_back(*nb);
    }
  } else {
    // Split: the part with the old base keeps its slot; the new part is
    // based on the outgoing merged arc and inserted right after.
    int iU = -1;
    for (size_t k = 0; k < bd.baseArcs.size(); ++k)
      if (d.componentOf(bd.baseArcs[k]) == compU) iU = static_cast<int>(k);
    auto oldBaseNew = mappedBase(bd.baseArcs[iU]);
    auto armA = mappedBase(underIn);  // merged arc continuing past the smoothing
    auto armB = mappedBase(overIn);
    for (size_t k = 0; k < bd.baseArcs.size(); ++k) {
      if (static_cast<int>(k) == iU) {
        std::optional<int> first = oldBaseNew, second;
        if (oldBaseNew) {
          int baseComp = sr.diagram.componentOf(*oldBaseNew);
          if (armA && sr.diagram.componentOf(*armA) != baseComp)
            second = armA;
          else if (armB && sr.diagram.componentOf(*armB) != baseComp)
            second = armB;
        } else {
          // Old base became a free loop; the surviving part takes over.
          first = armA ? armA : armB;
        }
        if (first) out.baseArcs.push_back(*first);
        if (second) out.baseArcs.push_back(*second);
      } else {
        auto nb = mappedBase(bd.baseArcs[k]);
        if (nb) out.baseArcs.push_back(nb.value());
      }
    }
  }
  // Every arc-component needs exactly one base; cover stragglers (possible
  // only if both split arms landed on base-less parts).
  std::set<int> covered;
  for (int b : out.baseArcs) covered.insert(out.d.componentOf(b));
  for (size_t ci = 0; ci < out.d.components().size(); ++ci)
    if (!covered.count(static_cast<int>(ci))) out.baseArcs.push_back(out.d.components()[ci].lo);
  return out;
}

struct TreeBuilder {
  long budget;
  int nodes = 0;

  std::unique_ptr<SkeinNode> build(const BasedDiagram& bd) {
    if (++nodes > budget) throw ResourceLimit("skein tree node budget exceeded");
    auto node = std::make_unique<SkeinNode>();
    node->label = bd;
    FirstNonDescending fnd = firstNonDescending(bd);
    node->dValue = fnd.dValue;
    if (!fnd.crossing) return node;
    int x = *fnd.crossing;
    node->resolvedCrossing = x;
    node->resolvedSign = bd.d.sign(x);
    BasedDiagram changed{crossingChange(bd.d, x), bd.baseArcs};
    node->childChange = build(changed);
    node->childSmooth = build(smoothBased(bd, x));
    return node;
  }
};

}  // namespace

SkeinTree descendingTree(const BasedDiagram& bd, const SkeinOptions& opt) {
  TreeBuilder tb{opt.nodeBudget};
  SkeinTree t;
  t.root = tb.build(bd);
  t.nodeCount = tb.nodes;
  return t;
}

bool isPositiveTree(const SkeinTree& t) {
  bool ok = true;
  std::function<void(const SkeinNode*)> visit = [&](const SkeinNode* n) {
    if (!n || n->isLeaf()) return;
    if (n->resolvedSign <= 0) ok = false;
    visit(n->childChange.get());
    visit(n->childSmooth.get());
  };
  visit(t.root.get());
  return ok;
}

std::string SkeinTree::toDot() const {
  std::ostringstream out;
  out << "digraph skein {\n";
  int id = 0;
  std::function<int(const SkeinNode*)> emit = [&](const SkeinNode* n) -> int {
    int me = id++;
    out << "  n" << me << " [label=\"" << n->label.d.toPD() << "\\nd=" << n->dValue << "\"];\n";
    if (!n->isLeaf()) {
      int c1 = emit(n->childChange.get());
      int c2 = emit(n->childSmooth.get());
      out << "  n" << me << " -> n" << c1 << " [label=\"change x" << *n->resolvedCrossing << "\"];\n";
      out << "  n" << me << " -> n" << c2 << " [label=\"smooth x" << *n->resolvedCrossing << "\"];\n";
    }
    return me;
  };
  if (root) emit(root.get());
  out << "}\n";
  return out.str();
}

namespace {

// Shared evaluation driver for Conway and HOMFLY.
template <typename Poly, typename Leaf, typename Combine, typename SplitFn>
class SkeinEvaluator {
 public:
  SkeinEvaluator(const SkeinOptions& opt, Leaf leaf, Combine combine, SplitFn split)
      : budget_(opt.nodeBudget), leaf_(leaf), combine_(combine), split_(split), cache_(1 << 16) {}

  Poly eval(const BasedDiagram& bd) {
    if (++nodes_ > budget_) throw ResourceLimit("skein node budget exceeded");
    if (bd.d.crossings() == 0) return leaf_(bd.d.componentCount());
    if (bd.d.isSplit()) return split_(*this, bd.d);
    std::string key = bd.canonicalKey();
    if (const Poly* hit = cache_.get(key)) return *hit;
    FirstNonDescending fnd = firstNonDescending(bd);
    Poly result;
    if (!fnd.crossing) {
      result = leaf_(bd.d.componentCount());
    } else {
      int x = *fnd.crossing;
      BasedDiagram changed{crossingChange(bd.d, x), bd.baseArcs};
      Poly pc = eval(changed);
      Poly ps = eval(smoothBased(bd, x));
      result = combine_(bd.d.sign(x), pc, ps);
    }
    cache_.put(key, result);
    return result;
  }

 private:
  long budget_;
  long nodes_ = 0;
  Leaf leaf_;
  Combine combine_;
  SplitFn split_;
  LruCache<Poly> cache_;
};

LaurentPoly2 homflyUnlink(int n) {
  // P(U_n) = ((v^{-1} - v)/z)^{n-1}
  LaurentPoly2 factor = LaurentPoly2::monomial(1, -1, -1) - LaurentPoly2::monomial(1, 1, -1);
  LaurentPoly2 r(1);
  for (int i = 1; i < n; ++i) r = r * factor;
  return r;
}

}  // namespace

LaurentPoly conway(const Diagram& d, const SkeinOptions& opt) {
  auto leaf = [](int n) { return n == 1 ? LaurentPoly(1) : LaurentPoly(0); };
  auto combine = [](int sign, const LaurentPoly& pc, const LaurentPoly& ps) {
    LaurentPoly z = LaurentPoly::monomial(1, 1);
    // Node is D+ when the resolved crossing is positive.
    return sign > 0 ? pc + z * ps : pc - z * ps;
  };
  auto split = [](auto&, const Diagram&) { return LaurentPoly(0); };
  SkeinEvaluator<LaurentPoly, decltype(leaf), decltype(combine), decltype(split)> ev(opt, leaf,
                                                                                     combine, split);
  return ev.eval(BasedDiagram::standard(d));
}

LaurentPoly2 homfly(const Diagram& d, const SkeinOptions& opt) {
  auto leaf = [](int n) { return homflyUnlink(n); };
  auto combine = [](int sign, const LaurentPoly2& pc, const LaurentPoly2& ps) {
    if (sign > 0) {
      // P+ = v^2 P- + v z P0
      return pc.shifted(2, 0) + ps.shifted(1, 1);
    }
    // P- = v^-2 P+ - v^-1 z P0
    return pc.shifted(-2, 0) - ps.shifted(-1, 1);
  };
  auto split = [&opt](auto& ev, const Diagram& dd) {
    LaurentPoly2 factor = LaurentPoly2::monomial(1, -1, -1) - LaurentPoly2::monomial(1, 1, -1);
    LaurentPoly2 r(1);
    bool first = true;
    for (const Diagram& part : dd.splitComponents()) {
      if (!first) r = r * factor;
      first = false;
      r = r * ev.eval(BasedDiagram::standard(part));
    }
    return r;
  };
  SkeinEvaluator<LaurentPoly2, decltype(leaf), decltype(combine), decltype(split)> ev(opt, leaf,
                                                                                      combine, split);
  return ev.eval(BasedDiagram::standard(d));
}

LaurentPoly jones(const Diagram& d, const SkeinOptions& opt) {
  return homfly(d, opt).jonesSpecialization();
}

// ---------------------------------------------------------------------------
// Dubrovnik polynomial engine on unoriented diagrams.

namespace {

struct UEnd {
  int v = -1, slot = -1;
  bool operator<(const UEnd& o) const { return v != o.v ? v < o.v : slot < o.slot; }
  bool operator==(const UEnd& o) const { return v == o.v && slot == o.slot; }
};

// Unoriented 4-valent diagram; the over-strand occupies slots 1 and 3.
struct UDiagram {
  std::vector<std::array<UEnd, 4>> adj;
  int loops = 0;

  int vertices() const { return static_cast<int>(adj.size()); }

  std::string key() const {
    std::ostringstream out;
    for (auto& v : adj)
      for (auto& e : v) out << e.v << "." << e.slot << ";";
    out << "L" << loops;
    return out.str();
  }
};

UDiagram fromDiagram(const Diagram& d) {
  UDiagram u;
  u.adj.resize(d.crossings());
  u.loops = d.freeLoops();
  for (auto& comp : d.components()) {
    for (int a : comp.arcs) {
      Occ t = d.tail(a), h = d.head(a);
      u.adj[t.crossing][t.pos] = UEnd{h.crossing, h.pos};
      u.adj[h.crossing][h.pos] = UEnd{t.crossing, t.pos};
    }
  }
  return u;
}

// Remove vertex x, re-pairing its slots per `pair0` (slot pairing like
// {{0,1},{2,3}}); splice arcs and count pinched-off circles.
UDiagram spliceOut(const UDiagram& u, int x, std::array<std::array<int, 2>, 2> pairing) {
  UDiagram r;
  r.loops = u.loops;
  std::vector<int> vmap(u.vertices(), -1);
  for (int v = 0; v < u.vertices(); ++v)
    if (v != x) {
      vmap[v] = static_cast<int>(r.adj.size());
      r.adj.push_back({});
    }
  auto partnerSlot = [&](int s) {
    for (auto& pr : pairing) {
      if (pr[0] == s) return pr[1];
      if (pr[1] == s) return pr[0];
    }
    return -1;
  };
  auto resolve = [&](UEnd e) {
    while (e.v == x) e = u.adj[x][partnerSlot(e.slot)];
    return e;
  };
  std::set<int> usedSlots;
  for (int v = 0; v < u.vertices(); ++v) {
    if (v == x) continue;
    for (int s = 0; s < 4; ++s) {
      UEnd e = resolve(u.adj[v][s]);
      r.adj[vmap[v]][s] = UEnd{vmap[e.v], e.slot};
    }
  }
  // Circles living entirely on x: trace each smoothing channel; a circle
  // closes when the chain slot -> partner -> arc returns to its start.
  std::set<int> remaining{0, 1, 2, 3};
  while (!remaining.empty()) {
    int s0 = *remaining.begin();
    int s = s0;
    bool closed = false;
    std::set<int> seen;
    while (true) {
      seen.insert(s);
      int ps = partnerSlot(s);
      seen.insert(ps);
      UEnd e = u.adj[x][ps];
      if (e.v != x) break;  // chain escapes to another vertex
      s = e.slot;
      if (s == s0) {
        closed = true;
        break;
      }
    }
    if (closed) r.loops++;
    for (int cs : seen) remaining.erase(cs);
    remaining.erase(s0);
  }
  return r;
}

// Over/under switch: rotate slot labels so the other strand is (1,3).
UDiagram switchVertex(const UDiagram& u, int x) {
  UDiagram r = u;
  std::array<UEnd, 4> old = r.adj[x];
  for (int s = 0; s < 4; ++s) r.adj[x][(s + 1) % 4] = old[s];
  for (int v = 0; v < r.vertices(); ++v)
    for (int s = 0; s < 4; ++s)
      if (r.adj[v][s].v == x) r.adj[v][s].slot = (r.adj[v][s].slot + 1) % 4;
  return r;
}

// Kink: arc joining adjacent slots of one vertex. Sign +1 for {1,2}/{3,0},
// -1 for {0,1}/{2,3} (over-strand on slots 1,3).
std::optional<std::pair<int, int>> findKink(const UDiagram& u) {
  for (int v = 0; v < u.vertices(); ++v)
    for (int s = 0; s < 4; ++s)
      if (u.adj[v][s] == UEnd{v, (s + 1) % 4}) return std::make_pair(v, s);
  return std::nullopt;
}

struct DescState {
  std::optional<int> firstInconsistent;
  int prefix = 0;  // vertices passed over-first before the failure
};

DescState unorientedWalkState(const UDiagram& u) {
  // Walk strand components in deterministic order: start at the lowest
  // unvisited vertex's slot 0, enter slot s -> exit (s+2)%4.
  DescState st;
  std::set<int> visited;
  std::set<std::pair<int, int>> walked;  // (v, entry slot)
  for (int v0 = 0; v0 < u.vertices(); ++v0) {
    for (int s0 : {0, 1}) {
      if (walked.count({v0, s0})) continue;
      int v = v0, s = s0;
      do {
        walked.insert({v, s});
        walked.insert({v, (s + 2) % 4});
        if (!visited.count(v)) {
          if (s == 0 || s == 2) {
            st.firstInconsistent = v;
            st.prefix = static_cast<int>(visited.size());
            return st;
          }
          visited.insert(v);
        }
        UEnd e = u.adj[v][(s + 2) % 4];
        v = e.v;
        s = e.slot;
      } while (!walked.count({v, s}));
    }
  }
  st.prefix = static_cast<int>(visited.size());
  return st;
}

// Writhe of a descending kink-free diagram with arbitrarily chosen component
// orientations (inter-component contributions cancel for descending stacks).
int selfWrithe(const UDiagram& u) {
  std::map<std::pair<int, int>, bool> entered;  // (v, slot) -> strand enters here
  std::set<std::pair<int, int>> walked;
  for (int v0 = 0; v0 < u.vertices(); ++v0) {
    for (int s0 : {0, 1}) {
      if (walked.count({v0, s0})) continue;
      int v = v0, s = s0;
      do {
        walked.insert({v, s});
        walked.insert({v, (s + 2) % 4});
        entered[{v, s}] = true;
        UEnd e = u.adj[v][(s + 2) % 4];
        v = e.v;
        s = e.slot;
      } while (!walked.count({v, s}));
    }
  }
  int w = 0;
  for (int v = 0; v < u.vertices(); ++v) {
    int underIn = entered.count({v, 0}) && entered[{v, 0}] ? 0 : 2;
    int overIn = entered.count({v, 1}) && entered[{v, 1}] ? 1 : 3;
    w += (overIn == (underIn + 1) % 4) ? 1 : -1;
  }
  return w;
}

class DubrovnikEngine {
 public:
  explicit DubrovnikEngine(const SkeinOptions& opt) : budget_(opt.nodeBudget), cache_(1 << 15) {}

  // Regular-isotopy invariant Lambda.
  LaurentPoly2 lambda(const UDiagram& u) {
    if (++nodes_ > budget_) throw ResourceLimit("dubrovnik node budget exceeded");
    if (u.vertices() == 0) {
      return deltaPow(std::max(0, u.loops - 1));
    }
    std::string key = u.key();
    if (const LaurentPoly2* hit = cache_.get(key)) return *hit;
    LaurentPoly2 result;
    if (auto kink = findKink(u)) {
      auto [v, s] = *kink;
      int sign = (s == 1 || s == 3) ? +1 : -1;
      // Reidemeister I: erase the crossing, strands pass straight through.
      std::array<std::array<int, 2>, 2> pairing{{{0, 2}, {1, 3}}};
      result = LaurentPoly2::monomial(1, sign, 0) * lambda(spliceOut(u, v, pairing));
    } else {
      DescState st = unorientedWalkState(u);
      if (!st.firstInconsistent) {
        // Descending and kink-free: unlink stack with framing writhe.
        int n = countComponents(u);
        result = LaurentPoly2::monomial(1, selfWrithe(u), 0) * deltaPow(n - 1);
      } else {
        int x = *st.firstInconsistent;
        // Lambda_D = Lambda_switch + z (Lambda_A - Lambda_B) where A joins
        // the corners swept by rotating D's over-strand counterclockwise.
        LaurentPoly2 z = LaurentPoly2::monomial(1, 0, 1);
        LaurentPoly2 ls = lambda(switchVertex(u, x));
        LaurentPoly2 la = lambda(spliceOut(u, x, {{{1, 2}, {3, 0}}}));
        LaurentPoly2 lb = lambda(spliceOut(u, x, {{{0, 1}, {2, 3}}}));
        result = ls + z * (la - lb);
      }
    }
    cache_.put(key, result);
    return result;
  }

 private:
  long budget_;
  long nodes_ = 0;
  LruCache<LaurentPoly2> cache_;

  static int countComponents(const UDiagram& u) {
    std::set<std::pair<int, int>> walked;
    int n = u.loops;
    for (int v0 = 0; v0 < u.vertices(); ++v0)
      for (int s0 : {0, 1}) {
        if (walked.count({v0, s0})) continue;
        ++n;
        int v = v0, s = s0;
        do {
          walked.insert({v, s});
          walked.insert({v, (s + 2) % 4});
          UEnd e = u.adj[v][(s + 2) % 4];
          v = e.v;
          s = e.slot;
        } while (!walked.count({v, s}));
      }
    return n;
  }

  static LaurentPoly2 deltaPow(int n) {
    // delta = (a - a^-1)/z + 1
    LaurentPoly2 delta = LaurentPoly2::monomial(1, 1, -1) - LaurentPoly2::monomial(1, -1, -1) +
                         LaurentPoly2(1);
    LaurentPoly2 r(1);
    for (int i = 0; i < n; ++i) r = r * delta;
    return r;
  }
};

}  // namespace

LaurentPoly2 dubrovnik(const Diagram& d, const SkeinOptions& opt) {
  if (d.crossings() > opt.dubrovnikCap)
    throw ResourceLimit("diagram exceeds the dubrovnik crossing cap");
  if (d.isSplit()) {
    LaurentPoly2 delta = LaurentPoly2::monomial(1, 1, -1) - LaurentPoly2::monomial(1, -1, -1) +
                         LaurentPoly2(1);
    LaurentPoly2 r(1);
    bool first = true;
    for (const Diagram& part : d.splitComponents()) {
      if (!first) r = r * delta;
      first = false;
      r = r * dubrovnik(part, opt);
    }
    return r;
  }
  DubrovnikEngine eng(opt);
  LaurentPoly2 lam = eng.lambda(fromDiagram(d));
  int w = d.stats().w;
  return lam.shifted(-w, 0);
}

}  // namespace sapkit
