#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sapkit/diagram.hpp"
#include "sapkit/laurent.hpp"

namespace sapkit {

// A diagram with an ordered choice of base points, one arc per component.
// The order of baseArcs is the walk order of the components.
struct BasedDiagram {
  Diagram d;
  std::vector<int> baseArcs;

  static BasedDiagram canonical(const Diagram& d);  // lowest arc per component
  // SAP diagrams: standard base point from classify_positivity when
  // applicable, else canonical.
  static BasedDiagram standard(const Diagram& d);

  // Canonical relabeling determined by the based structure: component k
  // numbered consecutively starting at its base arc. Used as the memo key.
  std::string canonicalKey() const;
};

struct FirstNonDescending {
  std::optional<int> crossing;  // nullopt: diagram is descending
  int dValue = 0;               // crossings first met before the failure
};

FirstNonDescending firstNonDescending(const BasedDiagram& bd);

struct SkeinNode {
  BasedDiagram label;
  int dValue = 0;
  std::optional<int> resolvedCrossing;  // nullopt for leaves
  int resolvedSign = 0;
  std::unique_ptr<SkeinNode> childChange;
  std::unique_ptr<SkeinNode> childSmooth;
  bool isLeaf() const { return !resolvedCrossing.has_value(); }
};

struct SkeinTree {
  std::unique_ptr<SkeinNode> root;
  int nodeCount = 0;
  std::string toDot() const;
};

struct SkeinOptions {
  long nodeBudget = 10'000'000;
  int dubrovnikCap = 12;
};

SkeinTree descendingTree(const BasedDiagram& bd, const SkeinOptions& opt = {});
bool isPositiveTree(const SkeinTree& t);

// Exact polynomial invariants via the descending skein resolution.
LaurentPoly conway(const Diagram& d, const SkeinOptions& opt = {});
LaurentPoly2 homfly(const Diagram& d, const SkeinOptions& opt = {});
// Jones polynomial in half-integer exponents of t (exponent 2 == t).
LaurentPoly jones(const Diagram& d, const SkeinOptions& opt = {});
// Dubrovnik polynomial D_K(a, z) = a^{-w} Lambda_D(a, z).
LaurentPoly2 dubrovnik(const Diagram& d, const SkeinOptions& opt = {});

}  // namespace sapkit
