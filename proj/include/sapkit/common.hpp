#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sapkit {

// Error hierarchy. Every computational failure maps to one of these so the
// CLI can translate them into exit codes and structured messages.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : Error {
  explicit SyntaxError(const std::string& msg) : Error("SyntaxError: " + msg) {}
};
struct TopologyError : Error {
  explicit TopologyError(const std::string& msg) : Error("TopologyError: " + msg) {}
};
struct UnknownCrossing : Error {
  explicit UnknownCrossing(const std::string& msg) : Error("UnknownCrossing: " + msg) {}
};
struct NotIndependent : Error {
  explicit NotIndependent(const std::string& msg) : Error("NotIndependent: " + msg) {}
};
struct SplitDiagram : Error {
  explicit SplitDiagram(const std::string& msg) : Error("SplitDiagram: " + msg) {}
};
struct DisconnectedDiagram : Error {
  explicit DisconnectedDiagram(const std::string& msg) : Error("DisconnectedDiagram: " + msg) {}
};
struct NotReduced : Error {
  explicit NotReduced(const std::string& msg) : Error("NotReduced: " + msg) {}
};
struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& msg) : Error("ResourceLimit: " + msg) {}
};
struct OmegaIsOne : Error {
  explicit OmegaIsOne(const std::string& msg) : Error("OmegaIsOne: " + msg) {}
};
struct NonCertifiable : Error {
  explicit NonCertifiable(const std::string& msg) : Error("NonCertifiable: " + msg) {}
};
struct WrongClass : Error {
  explicit WrongClass(const std::string& msg) : Error("WrongClass: " + msg) {}
};
struct NotPositive : Error {
  explicit NotPositive(const std::string& msg) : Error("NotPositive: " + msg) {}
};
struct GenerationExhausted : Error {
  explicit GenerationExhausted(const std::string& msg) : Error("GenerationExhausted: " + msg) {}
};
struct TrivialityUndetermined : Error {
  explicit TrivialityUndetermined(const std::string& msg) : Error("TrivialityUndetermined: " + msg) {}
};

// splitmix64: tiny deterministic RNG used by the generators and the harness.
// Fixed algorithm so identical seeds give identical corpora on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is irrelevant for corpus generation but we
  // reject to keep the stream deterministic and unbiased anyway.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

}  // namespace sapkit
