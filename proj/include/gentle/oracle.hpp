#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/complexes.hpp"
#include "gentle/fp.hpp"
#include "gentle/modpres.hpp"
#include "gentle/resolve.hpp"

namespace gentle {

// The path basis of a finite-dimensional gentle algebra over F_p.
struct ExpandedAlgebra {
  int prime = 2;
  std::vector<Path> basis;                       // trivial paths first, then P by length
  std::vector<std::vector<std::size_t>> by_tail;  // basis of the projective Lambda e_v
  std::map<std::vector<int>, std::size_t> index;  // nontrivial paths
  std::vector<std::size_t> trivial_index;         // e_v

  std::size_t dim() const { return basis.size(); }
  std::size_t find(const Path& p) const;
};

ExpandedAlgebra expand_algebra(const Presentation& pres, int prime);

// M = N / L with N = sum of Lambda e_{v_j}; coordinates are pairs (generator, basis path).
struct ExpandedModule {
  int prime = 2;
  std::vector<std::pair<int, std::size_t>> ambient;  // basis of N
  std::vector<int> ambient_vertex;                    // head vertex of each ambient basis vector
  fp::Mat relations;                                  // rows spanning L, in reduced echelon form
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> quotient;                  // ambient indices forming a basis of M

  std::size_t dim() const { return quotient.size(); }
  std::vector<long> dimension_vector(int vertices) const;
};

ExpandedModule expand_module(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& m);
// The ambient vectors lambda * r for every relation r of the presentation (spanning L).
fp::Mat submodule_rows(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& m,
                       const std::vector<std::pair<int, std::size_t>>& ambient);

struct ExpandedComplex {
  int prime = 2;
  long lo_degree = 0;
  long hi_degree = 0;
  std::map<long, std::vector<std::pair<std::size_t, std::size_t>>> bases;  // (slot, basis path)
  std::map<long, fp::Mat> d;                                               // rows P^{n+1}, columns P^n

  std::size_t dim(long n) const;
  fp::Mat matrix(long n) const;  // zero matrix of the right shape when absent
};

ExpandedComplex expand_complex(const Presentation& pres, const ExpandedAlgebra& alg, const PathMatrixComplex& cx);
// dim ker d^n - rank d^{n-1} for each degree n in [from, to].
std::map<long, long> homology_report(const ExpandedComplex& e, long from, long to);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool ok() const;
  const Check* first_failure() const;
  std::string render() const;  // `check <name>: pass|fail <detail>` lines
};

// Compares a resolution complex with a module presentation: homology vanishes away from degree t,
// dim H^t = dim M, and im d^{t-1} equals L under generator k of P^t |-> (-1)^k g_k.
VerificationReport compare_resolution(const Presentation& pres, const ExpandedAlgebra& alg, const PathMatrixComplex& cx,
                                      long t, const ModulePresentation& m, bool whole_complex);

VerificationReport verify_string_resolution(const Presentation& pres, const Signs& signs, const ExpandedAlgebra& alg,
                                            const Word& c);
// module_v replaces V on the module side when given.
VerificationReport verify_band_resolution(const Presentation& pres, const Signs& signs, const ExpandedAlgebra& alg,
                                          const Word& c, const TModule& v, const TModule* module_v = nullptr);

// Letterwise comparison of E with every shift of C and of C^-1 within the bound.
bool brute_force_equivalence(const Word& c, const Word& e, long shift_bound);

// Left multiplication by an arrow on M, in quotient coordinates.
fp::Mat arrow_action(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& m,
                     const ExpandedModule& e, int arrow);
// dim Hom(X, M).
long hom_dimension(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& x,
                   const ModulePresentation& m);

struct Fingerprint {
  long dim = 0;
  std::vector<long> by_vertex;
  std::vector<long> homs;  // dim Hom(X_k, M) over a test family
  bool operator==(const Fingerprint& o) const { return dim == o.dim && by_vertex == o.by_vertex && homs == o.homs; }
  Fingerprint& operator+=(const Fingerprint& o);
};

Fingerprint fingerprint(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& m,
                        const std::vector<ModulePresentation>& family);

// Presentation of a module over F_p with integer coefficients reduced.
ModulePresentation over_prime(const ModulePresentation& m, int prime);

}  // namespace gentle
