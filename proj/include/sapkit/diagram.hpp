#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sapkit/common.hpp"

namespace sapkit {

// One PD record: four arc labels starting at the incoming under-strand and
// proceeding around the crossing. With orientations implied by consecutive
// arc numbering, the over-strand runs either position 1 -> 3 (sign +1) or
// position 3 -> 1 (sign -1).
struct CrossingPD {
  std::array<int, 4> arcs;
  int& operator[](int i) { return arcs[i]; }
  int operator[](int i) const { return arcs[i]; }
  bool operator==(const CrossingPD& o) const { return arcs == o.arcs; }
  bool operator<(const CrossingPD& o) const { return arcs < o.arcs; }
};

// Occurrence of an arc label at a crossing.
struct Occ {
  int crossing = -1;
  int pos = -1;
  bool operator==(const Occ& o) const { return crossing == o.crossing && pos == o.pos; }
};

struct Component {
  int lo = 0, hi = 0;          // contiguous arc label range
  std::vector<int> arcs;       // labels in orientation order starting at lo
};

struct DiagramStats {
  int s = 0;       // Seifert circles (including free loops)
  int c = 0;       // crossings
  int cPlus = 0;
  int cMinus = 0;
  int w = 0;       // writhe
  int chi = 0;     // s - c
  std::optional<int> genus;  // knots only: (1 - chi)/2
};

// Seifert circles and the circle/crossing multigraph.
struct SeifertData {
  // Each circle: arcs in traversal order. Circles are indexed; free loops of
  // the diagram occupy the trailing indices and have empty arc lists.
  std::vector<std::vector<int>> circles;
  std::map<int, int> circleOfArc;
  // Per crossing: the two circles it joins (underSource = circle of the
  // incoming under-strand) plus the crossing sign.
  struct Edge {
    int underSource = -1;
    int other = -1;
    int sign = 0;
  };
  std::vector<Edge> edges;
  // Feet: per circle, crossings in traversal order (each crossing appears
  // once on each of its two circles).
  std::vector<std::vector<int>> feet;
  // Multiplicity of the unordered circle pair of each crossing.
  int pairMultiplicity(int crossing) const;
};

enum class CrossingType { Ia, Ib, IIa, IIb };

struct CheckerboardData {
  // Face colors for the coloring with white on the chosen side of the lowest
  // arc; 0 = white, 1 = black.
  std::vector<int> faceColor;
  std::vector<CrossingType> crossingTypes;
  int cIa = 0, cIb = 0, cIIa = 0, cIIb = 0;
  // Region census per color: (alpha, beta) -> count where alpha counts
  // type-a corners and beta type-b corners of the region.
  std::map<std::pair<int, int>, int> censusWhite;
  std::map<std::pair<int, int>, int> censusBlack;
  int whiteRegions = 0, blackRegions = 0;
  int sW = 0, sB = 0;  // Seifert circles bounding a white / black bigon
  int gammaWPos = 0, gammaBPos = 0;
  int eHalfBlack = 0;  // (1/2) e(B,K) = c_IIb - c_IIa
  int eHalfWhite = 0;  // (1/2) e(W,K) = c_Ia - c_Ib
};

enum class PositivityKind {
  Positive,
  AlmostPositiveI,
  AlmostPositiveII,
  GoodSAP,
  SAP,
  KAlmostPositive,
  General,
};

struct PositivityClass {
  PositivityKind kind = PositivityKind::General;
  int k = 0;  // number of negative crossings
  // For SAP kinds: crossings of the witness overarc in traversal order and
  // the standard base point (arc entering the first negative crossing as the
  // over-strand).
  std::vector<int> overarcCrossings;
  int baseArc = -1;
  bool isSAP() const {
    return kind == PositivityKind::Positive || kind == PositivityKind::AlmostPositiveI ||
           kind == PositivityKind::AlmostPositiveII || kind == PositivityKind::GoodSAP ||
           kind == PositivityKind::SAP;
  }
  bool isGood() const {
    return kind == PositivityKind::Positive || kind == PositivityKind::AlmostPositiveI ||
           kind == PositivityKind::GoodSAP;
  }
  std::string str() const;
};

// An oriented link diagram as a validated combinatorial map. Immutable after
// construction; all derived structure is computed eagerly.
class Diagram {
 public:
  Diagram() = default;  // empty diagram (no crossings, no loops)
  Diagram(std::vector<CrossingPD> pd, int freeLoops);

  static Diagram parsePD(const std::string& text);
  std::string toPD() const;  // canonical serialization

  const std::vector<CrossingPD>& pd() const { return pd_; }
  int freeLoops() const { return freeLoops_; }
  int crossings() const { return static_cast<int>(pd_.size()); }
  const std::vector<Component>& components() const { return components_; }
  int componentCount() const { return static_cast<int>(components_.size()) + freeLoops_; }
  bool isKnot() const { return componentCount() == 1; }

  int sign(int crossing) const { return signs_[crossing]; }
  const std::vector<int>& signs() const { return signs_; }
  int overInPos(int crossing) const { return signs_[crossing] > 0 ? 1 : 3; }
  int overOutPos(int crossing) const { return signs_[crossing] > 0 ? 3 : 1; }

  int succ(int arc) const;  // next arc along the orientation
  int pred(int arc) const;
  int componentOf(int arc) const;
  Occ head(int arc) const { return head_.at(arc); }  // occurrence where the arc ends
  Occ tail(int arc) const { return tail_.at(arc); }

  // Faces of the 4-valent map (rotation-system traces). Corner (x,k) lies
  // between tuple positions k and k+1 of crossing x.
  int faceCount() const { return faceCount_; }
  int cornerFace(int crossing, int k) const { return cornerFace_[crossing][k]; }
  int faceOfArrival(int crossing, int pos) const { return cornerFace_[crossing][pos]; }
  const std::vector<std::vector<std::pair<int, int>>>& faces() const { return faceCorners_; }
  int leftFace(int arc) const;   // face on the left of the directed arc
  int rightFace(int arc) const;

  DiagramStats stats() const;
  const SeifertData& seifert() const { return seifert_; }

  // Seifert regions: faces merged through the oriented smoothing at every
  // crossing, i.e. the complementary regions of the Seifert circles.
  int regionOfFace(int face) const { return regionOfFace_[face]; }
  int regionCount() const { return regionCount_; }
  int outerRegion() const { return outerRegion_; }
  int regionDepth(int region) const { return regionDepth_[region]; }
  // Per circle: the region on its parent side (toward the outer region) and
  // on its child side, plus the planar rotation sense rho (+1 when the
  // circle's left side is its child side).
  int parentRegion(int circle) const { return parentRegion_[circle]; }
  int childRegion(int circle) const { return childRegion_[circle]; }
  int rho(int circle) const { return rho_[circle]; }
  int bandRegion(int crossing) const { return bandRegion_[crossing]; }

  CheckerboardData checkerboard() const;
  PositivityClass classifyPositivity() const;

  bool isReduced() const;
  bool isSplit() const;
  bool isConnected() const;  // underlying 4-valent map connected, loops aside
  std::vector<Diagram> splitComponents() const;

  // Relabel all arcs via a permutation of labels (testing hook).
  Diagram relabeled(const std::map<int, int>& perm) const;

  bool operator==(const Diagram& o) const { return pd_ == o.pd_ && freeLoops_ == o.freeLoops_; }

 private:
  std::vector<CrossingPD> pd_;
  int freeLoops_ = 0;

  std::vector<Component> components_;
  std::map<int, int> componentOfArc_;
  std::vector<int> signs_;
  std::map<int, Occ> head_, tail_;

  int faceCount_ = 0;
  std::vector<std::array<int, 4>> cornerFace_;
  std::vector<std::vector<std::pair<int, int>>> faceCorners_;  // per face: (crossing, k)

  SeifertData seifert_;
  std::vector<int> regionOfFace_;
  int regionCount_ = 0;
  int outerRegion_ = 0;
  std::vector<int> regionDepth_;
  std::vector<int> parentRegion_, childRegion_, rho_;
  std::vector<int> bandRegion_;

  void validateAndBuild();
  void buildFaces();
  void buildSeifert();
  void buildRegions();
};

}  // namespace sapkit
