#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/genwords.hpp"
#include "gentle/modpres.hpp"

namespace gentle {

struct PathTerm {
  long coeff = 1;
  Path path;
};
using PathSum = std::vector<PathTerm>;

struct ComplexGenerator {
  std::string label;
  int vertex = -1;
  long index = 0;  // position i of g_i (or g_{i,omega})
  int omega = 0;
};

// Components P^n as ordered generator lists and differentials d^n : P^n -> P^{n+1} keyed by
// (row in P^{n+1}, column in P^n). An entry path g acts by right multiplication
// Lambda e_{h(g)} -> Lambda e_{t(g)}. Only degrees in [lo_degree, hi_degree] are materialized.
struct PathMatrixComplex {
  int prime = 0;     // 0: integer coefficients
  long period = 0;   // band complexes: the period of the cycle
  long lo_degree = 0;
  long hi_degree = 0;
  std::map<long, std::vector<ComplexGenerator>> components;
  std::map<long, std::map<std::pair<std::size_t, std::size_t>, PathSum>> differentials;

  const std::vector<ComplexGenerator>& component(long n) const;
  PathSum entry(long n, std::size_t row, std::size_t col) const;
};

using DegreeWindow = std::pair<long, long>;

// P(C) for a non-periodic generalised word, restricted to a degree window (required for infinite
// shapes; finite shapes default to every populated degree).
PathMatrixComplex string_complex(const Presentation& pres, const GenWord& g,
                                 std::optional<DegreeWindow> window = std::nullopt);
// P(E, V) for a periodic generalised word whose cycle has degree 0.
PathMatrixComplex band_complex(const Presentation& pres, const GenWord& g, const TModule& v);

// Positions i with H(i) in the window, ascending.
std::vector<long> window_positions(const GenWord& g, long lo_degree, long hi_degree);

// Checks d^{n+1} d^n = 0 after relation reduction; reports the first failure.
bool composes_to_zero(const Presentation& pres, const PathMatrixComplex& cx, std::string* where = nullptr);

// `deg <n>: <vertices>` and `d<n>[<row>,<col>] = <c>*<path> + ...` lines.
std::string render_complex(const Presentation& pres, const PathMatrixComplex& cx);

struct KernelEntry {
  enum class Kind { Trivial, Arrow, Zero };
  long index = 0;
  Kind kind = Kind::Zero;
  int arrow = -1;
  int vertex = -1;
};

// kappa(i) for each i in H^-1(n), ascending.
std::vector<KernelEntry> kernel_generators(const Presentation& pres, const GenWord& g, long n);
KernelEntry kernel_at(const Presentation& pres, const GenWord& g, long i);
std::string render_kernel_entry(const Presentation& pres, const KernelEntry& k);

struct ResolutionVerdict {
  enum class Kind { StringResolutionAt, BandResolutionAt, NotAResolution };
  Kind kind = Kind::NotAResolution;
  long shift = 0;   // C[shift] has the recognized shape
  long degree = 0;  // the degree of P(C) carrying the homology
  std::string reason;
};

ResolutionVerdict recognize_resolution(const Presentation& pres, const Signs& signs, const GenWord& g);
std::string render_verdict(const ResolutionVerdict& v);

}  // namespace gentle
