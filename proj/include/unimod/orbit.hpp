#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unimod/isometry.hpp"

namespace unimod {

/// Lexicographic order on coordinates.
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const;
};

struct OrbitResult {
  std::vector<Vec> vectors;  // sorted lexicographically
  bool truncated = false;    // some image left the coefficient box
};

/// Closure of `start` under the generators, never leaving the box
/// max|coord| <= coeff_bound.
OrbitResult orbit_bfs(const GeneratorSet& gens, const Vec& start, const Int& coeff_bound);

enum class EscapeKind { odd, even, generic };

std::string to_string(EscapeKind kind);

struct EscapeStep {
  Vec gamma;   // reflection vector
  Vec vector;  // R_gamma(previous vector)
  /// Even procedure: 1, 2 or 3 for the case of the vector being reflected.
  /// 0 for the odd and generic procedures.
  int case_label = 0;
};

/// A chain of reflections whose tracked coordinate moves strictly
/// monotonically, so every vector in the chain is new.
struct EscapeTrace {
  GramForm form;
  Vec start;
  std::vector<EscapeStep> steps;
  std::size_t tracked_index = 0;
  EscapeKind kind = EscapeKind::generic;
  /// Even procedure only: +1 / -1 when the tracked coordinate increases /
  /// decreases. Odd and generic traces grow in absolute value instead.
  int direction = 0;

  const Vec& vector_at(std::size_t k) const { return k == 0 ? start : steps[k - 1].vector; }
};

/// Diagonal +-1 forms of rank >= 3 with exactly one entry of the minority
/// sign (n<1>+<-1> and its mirror). Returns the index of that entry.
std::optional<std::size_t> odd_escape_pivot(const GramForm& form);

/// U + lE8 (either sign of E8, l >= 1) laid out as one hyperbolic block
/// followed by E8 blocks. Returns the index of the first U basis vector.
std::optional<std::size_t> even_escape_pivot(const GramForm& form);

EscapeTrace escape_odd(const GramForm& form, const Vec& start, std::size_t steps);
EscapeTrace escape_even(const GramForm& form, const Vec& start, std::size_t steps);
/// Greedy search over reflections in short vectors that strictly enlarge
/// the sum of squared coordinates; throws budget_exhausted when no candidate grows.
EscapeTrace escape_generic(const GramForm& form, const Vec& start, std::size_t steps);
/// Dispatches on the recognized block shape.
EscapeTrace escape(const GramForm& form, const Vec& start, std::size_t steps);

/// Empty string when the trace is sound: every step is the stated reflection
/// (an integral isometry), the tracked coordinate is strictly monotone and
/// norm / characteristic status / content are preserved.
std::string check_escape_trace(const EscapeTrace& trace);

/// Characteristic vectors of norm sigma + 8k in a form whose leading 4x4
/// block is 2U or 2<1>+2<-1> (diag(1,1,-1,-1)), orthogonally summed with an
/// arbitrary unimodular tail.
std::vector<Vec> characteristic_family(const GramForm& form, const Int& k, std::size_t count);

/// A full rank-2 isotropic sublattice, keyed by the row Hermite form of its
/// spanning rows.
class IsotropicPlane {
 public:
  /// Throws invalid_argument when the rows do not span a full isotropic plane.
  IsotropicPlane(const GramForm& form, IntMatrix rows);

  const IntMatrix& rows() const noexcept { return rows_; }
  const IntMatrix& normal_form() const noexcept { return normal_form_; }

  IsotropicPlane transformed(const Isometry& g) const;

  friend bool operator==(const IsotropicPlane& a, const IsotropicPlane& b) {
    return a.normal_form_ == b.normal_form_;
  }
  friend bool operator<(const IsotropicPlane& a, const IsotropicPlane& b) {
    return a.normal_form_ < b.normal_form_;
  }

 private:
  IsotropicPlane(IntMatrix rows, IntMatrix normal_form)
      : rows_(std::move(rows)), normal_form_(std::move(normal_form)) {}

  IntMatrix rows_;
  IntMatrix normal_form_;
};

/// Brute force over pairs of vectors with coordinates in [-bound, bound].
std::vector<IsotropicPlane> enumerate_isotropic_planes(const GramForm& form, long bound);

/// In 2U with basis (x0,y0,x1,y1): variant 1 is <a x0 + b x1, b y0 - a y1>,
/// variant 2 is <a x0 + b y1, b y0 - a x1>. Needs gcd(a, b) = 1.
IsotropicPlane plane_family_2U(const Int& a, const Int& b, int variant);

struct PlaneOrbit {
  std::vector<IsotropicPlane> planes;               // discovery order
  std::vector<std::vector<std::string>> words;      // generator word reaching each
  std::vector<Isometry> witnesses;                  // evaluated words
};

/// Breadth-first search of the images of `start` under generator words,
/// stopping after `max_planes` distinct planes or `max_depth` levels.
PlaneOrbit plane_orbit_bfs(const GeneratorSet& gens, const IsotropicPlane& start, std::size_t max_planes,
                           std::size_t max_depth);

struct TransitivityReport {
  std::vector<Vec> candidates;
  std::vector<Vec> reached;
  std::vector<Vec> unreached;
  bool truncated = false;
};

/// Primitive vectors of the given norm and type inside the box, and which of
/// them lie in the bounded orbit of the lexicographically first. Empirical:
/// an unreached vector is not a counterexample.
TransitivityReport transitivity_probe(const GeneratorSet& gens, const Int& norm_value, bool characteristic,
                                      long coeff_bound);

struct CosetCertificate {
  GramForm form;
  std::vector<Vec> invariant_set;
  std::vector<Isometry> witnesses;
  std::vector<std::vector<Vec>> images;  // each sorted
  std::optional<EscapeTrace> trace;
};

/// n isometries whose images of S are pairwise distinct sets; any subgroup
/// stabilizing S therefore has at least n cosets.
CosetCertificate coset_certificate(const GramForm& form, const std::vector<Vec>& invariant_set, std::size_t n,
                                   std::size_t step_budget = 4096);

/// Replays a certificate from scratch; empty string when it holds.
std::string check_coset_certificate(const CosetCertificate& cert);

}  // namespace unimod
