#pragma once

#include <array>
#include <string>
#include <vector>

#include "unimod/orbit.hpp"

namespace unimod {

enum class Kodaira { minus_infinity, zero, one, two };

std::string to_string(Kodaira k);

/// K.[w] and K.K of a minimal model. K.[w] = 0 with K.K > 0 matches no case
/// and throws inconsistent_input.
Kodaira kodaira_dimension(const Int& k_dot_omega, const Int& k_squared);

/// Norm of a canonical class: 2 chi + 3 sigma.
Int canonical_norm(const Int& chi, const Int& sigma);

struct CYTableRow {
  std::string label;
  int b1, b2, b_plus, chi, sigma;

  bool consistent() const { return chi == 2 - 2 * b1 + b2 && sigma == 2 * b_plus - b2; }
};

const std::vector<CYTableRow>& cy_table();

/// Invariant forms on the Kodaira-Thurston nilmanifold with shear lambda.
/// One-form basis e1 = dx, e2 = dy, e3 = dz - lambda y dx, e4 = dt, with
/// d e3 = lambda e1^e2 and the others closed.
struct KTAlgebra {
  long lambda = 0;
  /// F1 = e1^e4, F2 = e2^e3, F3 = e2^e4, F4 = e3^e1 as coordinates on the
  /// six e_i^e_j (i < j) in the order 12, 13, 14, 23, 24, 34.
  std::array<Vec, 4> two_forms;
  IntMatrix h2_gram;      // F_i ^ F_j against e1^e2^e3^e4
  bool closed = false;    // every F_i is closed
  bool spans_h2 = false;  // F_1..F_4 with the exact e1^e2 span the closed forms
};

/// Throws invalid_argument for lambda = 0.
KTAlgebra kt_algebra(long lambda);

struct WedgeImage {
  /// Wedge of each pair from {dx, dy, dt} in F-coordinates modulo exact forms.
  std::vector<std::pair<std::string, Vec>> products;
  IsotropicPlane plane;
};

WedgeImage wedge_image(const KTAlgebra& alg);

/// phi(x, y, z, t) = ((x,y)T, det(T) z + (x,y) B (x,y)^t + (x,y).v, t).
/// v is zero when B alone makes every image generator integral.
struct PhiT {
  long lambda = 0;
  IntMatrix t;
  RatMatrix b;
  RatVec v;
  /// l' with phi(l g) = l' phi(g) for l the unit generators in x, y, z, t.
  std::array<Vec, 4> images;
  bool polynomial_identity = false;
  bool sample_points = false;
};

PhiT solve_phi_T(long lambda, const IntMatrix& t, std::uint64_t seed = 0);

/// (x0, y0, z0, t0)(x, y, z, t) = (x0 + x, y0 + y, z0 + z + lambda x0 y, t0 + t).
RatVec kt_multiply(long lambda, const RatVec& g, const RatVec& h);
RatVec apply_phi(const PhiT& phi, const RatVec& g);

/// n distinct planes in the wall-generator orbit of <x0, x1> in 2U.
PlaneOrbit kt_infinite_index_witness(std::size_t n, std::size_t max_depth = 64);

}  // namespace unimod
