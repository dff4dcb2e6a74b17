#include "sapkit/transforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sapkit {

namespace {

// Endpoint of an arc at a crossing slot of the diagram being assembled.
struct EP {
  int crossing = -1;  // index into the assembler's crossing list
  int slot = -1;
  bool operator<(const EP& o) const {
    return crossing != o.crossing ? crossing < o.crossing : slot < o.slot;
  }
  bool operator==(const EP& o) const { return crossing == o.crossing && slot == o.slot; }
};

// Rebuilds a diagram from crossings with slot-level connections. Slots keep
// PD semantics: 0 = under-in, 2 = under-out, over-in at 1 for positive
// crossings and at 3 for negative ones.
class Assembler {
 public:
  int addCrossing(int sign) {
    signs_.push_back(sign);
    return static_cast<int>(signs_.size()) - 1;
  }
  int overIn(int x) const { return signs_[x] > 0 ? 1 : 3; }
  int overOut(int x) const { return signs_[x] > 0 ? 3 : 1; }

  // Arc from an out-slot to an in-slot carrying a tag (old arc label or -1).
  void connect(EP from, EP to, int tag) { conn_[from] = {to, tag}; }

  // Assemble into a Diagram; tags of absorbed arcs map to new labels.
  SurgeryResult assemble(int extraFreeLoops) {
    const int n = static_cast<int>(signs_.size());
    std::vector<CrossingPD> pd(n, CrossingPD{{0, 0, 0, 0}});
    std::map<int, int> tagMap;

    // Strand tracing: entering at an in-slot exits at the paired out-slot.
    auto exitSlot = [&](int x, int in) { return in == 0 ? 2 : (in == overIn(x) ? overOut(x) : -1); };

    std::set<EP> seenOut;
    int nextLabel = 1;
    int loops = extraFreeLoops;
    // Deterministic component order: scan out-slots by (crossing, slot).
    std::vector<EP> outs;
    for (auto& [from, to] : conn_) outs.push_back(from);
    std::sort(outs.begin(), outs.end());
    for (EP start : outs) {
      if (seenOut.count(start)) continue;
      // Walk the component, assigning consecutive labels.
      EP cur = start;
      do {
        seenOut.insert(cur);
        auto [to, tag] = conn_.at(cur);
        int label = nextLabel++;
        pd[cur.crossing][cur.slot] = label;
        pd[to.crossing][to.slot] = label;
        if (tag >= 0) tagMap[tag] = label;
        int out = exitSlot(to.crossing, to.slot);
        if (out < 0) throw TopologyError("assembler: arc enters a non-in slot");
        cur = {to.crossing, out};
      } while (!(cur == start));
    }
    SurgeryResult r{Diagram(pd, loops), std::move(tagMap), {}};
    return r;
  }

 private:
  std::vector<int> signs_;
  std::map<EP, std::pair<EP, int>> conn_;
};

}  // namespace

Diagram crossingChange(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossings()) throw UnknownCrossing("crossing index out of range");
  std::vector<CrossingPD> pd = d.pd();
  CrossingPD& x = pd[crossing];
  if (d.sign(crossing) > 0)
    x = CrossingPD{{x[1], x[2], x[3], x[0]}};
  else
    x = CrossingPD{{x[3], x[0], x[1], x[2]}};
  return Diagram(pd, d.freeLoops());
}

SurgeryResult smoothOriented(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossings()) throw UnknownCrossing("crossing index out of range");
  // The smoothing joins under-in with over-out and over-in with under-out.
  // Splicing happens at the connection-map level so arcs that both start and
  // end on the removed crossing are absorbed correctly.
  const int oo = d.overOutPos(crossing);

  Assembler asmb;
  std::vector<int> xmap(d.crossings(), -1);
  for (int x = 0; x < d.crossings(); ++x)
    if (x != crossing) xmap[x] = asmb.addCrossing(d.sign(x));

  // conn on old endpoints first.
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> conn;  // (x,slot)->((x,slot),arc)
  for (auto& comp : d.components())
    for (int a : comp.arcs) {
      Occ t = d.tail(a), h = d.head(a);
      conn[{t.crossing, t.pos}] = {{h.crossing, h.pos}, a};
    }
  // Smoothed continuation inside the removed crossing: arriving at under-in
  // (slot 0) re-emerges at over-out; arriving at over-in re-emerges at
  // under-out (slot 2).
  auto continueOut = [&](int inSlot) { return inSlot == 0 ? oo : 2; };

  std::vector<std::vector<int>> aliasGroups;
  std::set<int> consumed;
  int loops = d.freeLoops();
  for (auto& [from, rest] : conn) {
    if (from.first == crossing) continue;  // handled via passthrough
    auto [to, arc] = rest;
    if (consumed.count(arc)) continue;
    std::vector<int> absorbed{arc};
    while (to.first == crossing) {
      auto [to2, arc2] = conn.at({crossing, continueOut(to.second)});
      absorbed.push_back(arc2);
      to = to2;
    }
    for (int a : absorbed) consumed.insert(a);
    // Emit with the first absorbed arc's tag; remaining tags alias it later.
    asmb.connect(EP{xmap[from.first], from.second}, EP{xmap[to.first], to.second}, absorbed[0]);
    // Stash aliases so arcMap covers every absorbed arc.
    aliasGroups.push_back(absorbed);
  }
  // Arcs never consumed: cycles living entirely on the removed crossing
  // become crossing-free loops.
  std::set<int> leftovers;
  for (auto& comp : d.components())
    for (int a : comp.arcs)
      if (!consumed.count(a)) leftovers.insert(a);
  while (!leftovers.empty()) {
    int a = *leftovers.begin();
    // Follow the smoothed continuation until the cycle closes.
    int cur = a;
    do {
      leftovers.erase(cur);
      Occ h = d.head(cur);
      auto [to, arc2] = conn.at({crossing, continueOut(h.pos)});
      cur = arc2;
    } while (cur != a);
    ++loops;
  }

  SurgeryResult r = asmb.assemble(loops);
  for (auto& group : aliasGroups) {
    auto it = r.arcMap.find(group[0]);
    if (it != r.arcMap.end())
      for (int a : group) r.arcMap[a] = it->second;
  }
  for (int x = 0; x < d.crossings(); ++x)
    if (x != crossing) r.crossingMap[x] = xmap[x];
  return r;
}

SurgeryResult tbarMove(const Diagram& d, int crossing, int N) {
  if (crossing < 0 || crossing >= d.crossings()) throw UnknownCrossing("crossing index out of range");
  if (N < 1) throw Error("tbar move needs N >= 1");
  const int eps = d.sign(crossing);
  const int m = 2 * N + 1;

  Assembler asmb;
  std::vector<int> xmap(d.crossings(), -1);
  for (int x = 0; x < d.crossings(); ++x)
    if (x != crossing) xmap[x] = asmb.addCrossing(d.sign(x));
  std::vector<int> chain(m);
  for (int i = 0; i < m; ++i) chain[i] = asmb.addCrossing(eps);

  // Strand A runs the under-direction through y_0..y_{m-1}; strand B runs
  // opposite, entering at y_{m-1}. The over-strand alternates along the
  // chain, keeping every crossing sign equal to eps.
  auto aIn = [&](int i) { return i % 2 == 0 ? 0 : asmb.overIn(chain[i]); };
  auto aOut = [&](int i) { return i % 2 == 0 ? 2 : asmb.overOut(chain[i]); };
  auto bIn = [&](int i) { return i % 2 == 0 ? asmb.overIn(chain[i]) : 0; };
  auto bOut = [&](int i) { return i % 2 == 0 ? asmb.overOut(chain[i]) : 2; };

  // Internal chain arcs.
  for (int i = 0; i + 1 < m; ++i) asmb.connect(EP{chain[i], aOut(i)}, EP{chain[i + 1], aIn(i + 1)}, -1);
  for (int i = m - 1; i >= 1; --i) asmb.connect(EP{chain[i], bOut(i)}, EP{chain[i - 1], bIn(i - 1)}, -1);

  // External arcs, rerouting endpoints of the replaced crossing.
  const int oi = d.overInPos(crossing);
  auto redirect = [&](Occ o) -> EP {
    if (o.pos == 0) return EP{chain[0], aIn(0)};                 // under-in arrives at y_0
    if (o.pos == 2) return EP{chain[m - 1], aOut(m - 1)};        // under-out departs from y_{m-1}
    if (o.pos == oi) return EP{chain[m - 1], bIn(m - 1)};        // over-in arrives at y_{m-1}
    return EP{chain[0], bOut(0)};                                // over-out departs from y_0
  };
  for (auto& comp : d.components())
    for (int a : comp.arcs) {
      Occ t = d.tail(a), h = d.head(a);
      EP from = t.crossing == crossing ? redirect(t) : EP{xmap[t.crossing], t.pos};
      EP to = h.crossing == crossing ? redirect(h) : EP{xmap[h.crossing], h.pos};
      asmb.connect(from, to, a);
    }

  SurgeryResult r = asmb.assemble(d.freeLoops());
  for (int x = 0; x < d.crossings(); ++x)
    if (x != crossing) r.crossingMap[x] = xmap[x];
  // Validate the construction: every inserted crossing keeps the sign.
  int plus = 0, minus = 0;
  for (int s : r.diagram.signs()) (s > 0 ? plus : minus)++;
  DiagramStats before = d.stats();
  if (eps > 0 && plus != before.cPlus + 2 * N)
    throw TopologyError("tbar move did not keep crossing signs");
  if (eps < 0 && minus != before.cMinus + 2 * N)
    throw TopologyError("tbar move did not keep crossing signs");
  return r;
}

int BandSurface::pairMultiplicity(int band) const {
  int u = bands[band].diskA, v = bands[band].diskB;
  int m = 0;
  for (auto& b : bands)
    if ((b.diskA == u && b.diskB == v) || (b.diskA == v && b.diskB == u)) ++m;
  return m;
}

std::string BandSurface::toJson() const {
  std::ostringstream out;
  out << "{\"disks\":" << disks << ",\"bands\":[";
  for (size_t i = 0; i < bands.size(); ++i) {
    if (i) out << ",";
    out << "[" << bands[i].diskA << "," << bands[i].diskB << "," << bands[i].posA << ","
        << bands[i].posB << "," << bands[i].sign << "]";
  }
  out << "]}";
  return out.str();
}

BandSurface canonicalSurface(const Diagram& d) {
  const SeifertData& sf = d.seifert();
  BandSurface s;
  s.disks = static_cast<int>(sf.circles.size());
  s.bands.resize(d.crossings());
  s.boundary.assign(s.disks, {});
  for (int x = 0; x < d.crossings(); ++x) {
    s.bands[x].diskA = sf.edges[x].underSource;
    s.bands[x].diskB = sf.edges[x].other;
    s.bands[x].sign = sf.edges[x].sign;
  }
  for (int ci = 0; ci < s.disks; ++ci) {
    for (int x : sf.feet[ci]) {
      int pos = static_cast<int>(s.boundary[ci].size());
      s.boundary[ci].push_back(x);
      // The Seifert graph of an oriented planar diagram is bipartite, so the
      // two feet of a band always lie on distinct disks.
      if (s.bands[x].diskA == ci)
        s.bands[x].posA = pos;
      else
        s.bands[x].posB = pos;
    }
  }
  return s;
}

BandSurface mpMove(const BandSurface& s, int band) {
  if (band < 0 || band >= static_cast<int>(s.bands.size())) throw UnknownCrossing("band out of range");
  const auto& b = s.bands[band];
  if (b.diskA == b.diskB || s.pairMultiplicity(band) != 1)
    throw NotIndependent("band is not the unique band between two distinct disks");
  int keep = b.diskA, gone = b.diskB;

  BandSurface r;
  r.disks = s.disks - 1;
  // Disk renumbering: gone is merged into keep; higher indices shift down.
  auto mapDisk = [&](int dsk) {
    if (dsk == gone) dsk = keep;
    return dsk > gone ? dsk - 1 : dsk;
  };
  std::vector<int> bandMap(s.bands.size(), -1);
  for (size_t i = 0; i < s.bands.size(); ++i) {
    if (static_cast<int>(i) == band) continue;
    bandMap[i] = static_cast<int>(r.bands.size());
    BandSurface::Band nb = s.bands[i];
    nb.diskA = mapDisk(nb.diskA);
    nb.diskB = mapDisk(nb.diskB);
    r.bands.push_back(nb);
  }
  // Boundary orders: splice gone's order (reversed, starting after the
  // deleted band) into keep's order at the deleted band's position.
  r.boundary.assign(r.disks, {});
  for (int dsk = 0; dsk < s.disks; ++dsk) {
    if (dsk == gone) continue;
    int nd = mapDisk(dsk);
    for (int bi : s.boundary[dsk]) {
      if (bi == band) {
        if (dsk != keep) continue;
        // Insert gone's other bands, reversed, rotated to start after `band`.
        const auto& g = s.boundary[gone];
        int start = 0;
        for (size_t j = 0; j < g.size(); ++j)
          if (g[j] == band) start = static_cast<int>(j);
        std::vector<int> rest;
        for (size_t j = 1; j < g.size(); ++j) rest.push_back(g[(start + j) % g.size()]);
        std::reverse(rest.begin(), rest.end());
        for (int gi : rest) r.boundary[nd].push_back(bandMap[gi]);
      } else {
        r.boundary[nd].push_back(bandMap[bi]);
      }
    }
  }
  // Refresh attachment positions from boundary lists (merging never creates
  // a band with both feet on one disk: the merged pair had multiplicity 1).
  for (int dsk = 0; dsk < r.disks; ++dsk)
    for (size_t p = 0; p < r.boundary[dsk].size(); ++p) {
      auto& nb = r.bands[r.boundary[dsk][p]];
      if (nb.diskA == dsk)
        nb.posA = static_cast<int>(p);
      else
        nb.posB = static_cast<int>(p);
    }
  return r;
}

bool bennequinCheck(const BandSurface& s, int chiK) { return -s.disks + s.writhe() <= -chiK; }

}  // namespace sapkit
