#pragma once

#include <map>
#include <vector>

#include "sapkit/diagram.hpp"

namespace sapkit {

// Result of a surgery that rebuilds arc labels. arcMap sends every old arc
// label to the label of the new arc that absorbed it.
struct SurgeryResult {
  Diagram diagram;
  std::map<int, int> arcMap;
  std::map<int, int> crossingMap;  // old crossing index -> new index (surviving ones)
};

// Flip over/under at one crossing; arc labels are untouched.
Diagram crossingChange(const Diagram& d, int crossing);

// Oriented (Seifert) smoothing at one crossing.
SurgeryResult smoothOriented(const Diagram& d, int crossing);

// Insert N full twists at a crossing: the crossing is replaced by a twist
// region of 2N+1 crossings of the same sign on the same two strands (the
// region reads as a clasp chain, so the canonical surface gains one band
// with N full twists).
SurgeryResult tbarMove(const Diagram& d, int crossing, int N);

// Disk-and-twisted-band model of a canonical Seifert surface.
struct BandSurface {
  struct Band {
    int diskA = 0, diskB = 0;
    int posA = 0, posB = 0;  // attachment indices on each disk boundary
    int sign = 0;
  };
  int disks = 0;
  std::vector<Band> bands;
  // Cyclic attachment order per disk: band indices in boundary order.
  std::vector<std::vector<int>> boundary;

  int chi() const { return disks - static_cast<int>(bands.size()); }
  int writhe() const {
    int w = 0;
    for (auto& b : bands) w += b.sign;
    return w;
  }
  bool allPositive() const {
    for (auto& b : bands)
      if (b.sign < 0) return false;
    return true;
  }
  // Multiplicity of the band's disk pair.
  int pairMultiplicity(int band) const;
  std::string toJson() const;
};

BandSurface canonicalSurface(const Diagram& d);

// Murasugi-Przytycki move at an independent band: merges the two endpoint
// disks and deletes the band; the swallowed disk's remaining attachments are
// re-inserted reversed (the disk flip reverses its boundary orientation).
BandSurface mpMove(const BandSurface& s, int band);

// Bennequin inequality check: -disks + writhe <= -chiK.
bool bennequinCheck(const BandSurface& s, int chiK);

}  // namespace sapkit
