#pragma once

#include <random>
#include <string>
#include <vector>

#include "unimod/form.hpp"

namespace unimod {

/// An integer matrix M acting on coordinate columns with M^T G M = G.
/// The invariant is checked on construction.
class Isometry {
 public:
  Isometry(GramForm form, IntMatrix mat);

  static Isometry identity(const GramForm& form);

  const GramForm& form() const noexcept { return form_; }
  const IntMatrix& matrix() const noexcept { return mat_; }
  int determinant() const;

  Vec apply(const Vec& v) const;

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.form_ == b.form_ && a.mat_ == b.mat_;
  }
  friend bool operator!=(const Isometry& a, const Isometry& b) { return !(a == b); }

 private:
  struct Trusted {};
  Isometry(GramForm form, IntMatrix mat, Trusted) : form_(std::move(form)), mat_(std::move(mat)) {}

  friend Isometry compose(const Isometry& g, const Isometry& h);
  friend Isometry inverse(const Isometry& g);

  GramForm form_;
  IntMatrix mat_;
};

/// g after h. Refuses isometries of different forms.
Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);
Vec apply(const Isometry& g, const Vec& v);

/// x -> x - (2 (x.gamma) / Q(gamma)) gamma. Requires Q(gamma) != 0 and
/// Q(gamma) | 2 (e.gamma) for every basis vector e.
Isometry reflection(const GramForm& form, const Vec& gamma);

/// Rational reflection matrix; only needs Q(gamma) != 0.
RatMatrix rational_reflection(const GramForm& form, const RatVec& gamma);

struct NamedIsometry {
  std::string label;
  Isometry isometry;
};

class GeneratorSet {
 public:
  explicit GeneratorSet(GramForm form) : form_(std::move(form)) {}

  void add(std::string label, Isometry g);

  const GramForm& form() const noexcept { return form_; }
  const std::vector<NamedIsometry>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  /// Throws invalid_argument for an unknown label.
  const Isometry& at(const std::string& label) const;

  /// Product of the word read left to right as composition:
  /// ["a","b"] is a after b.
  Isometry evaluate(const std::vector<std::string>& word) const;

  std::vector<std::string> random_word(std::size_t length, std::mt19937_64& rng) const;

 private:
  GramForm form_;
  std::vector<NamedIsometry> gens_;
};

/// n_i, s_i, p_ij (i<j) and a_ij (i!=j) on nU in the basis (x1,y1,...,xn,yn).
/// Labels are "n1", "s1", "p12", "a12" with 1-based indices.
GeneratorSet wall_generators(int n);

/// (det, orientation character on a maximal positive definite subspace).
/// Constant on connected components of the real orthogonal group.
struct ComponentInvariant {
  int eps_det = 1;
  int eps_plus = 1;

  friend bool operator==(const ComponentInvariant&, const ComponentInvariant&) = default;
  friend bool operator<(const ComponentInvariant& a, const ComponentInvariant& b) {
    return a.eps_det != b.eps_det ? a.eps_det < b.eps_det : a.eps_plus < b.eps_plus;
  }
};

ComponentInvariant component_invariant(const Isometry& g);
ComponentInvariant operator*(const ComponentInvariant& a, const ComponentInvariant& b);

/// Reflection vectors gamma_1..gamma_k (primitive integral multiples of the
/// rational vectors found) with g = R_1 o R_2 o ... o R_k.
std::vector<Vec> spinor_factorization(const Isometry& g);

/// Product of sign(Q(gamma_i)) over a reflection factorization.
int spinor_norm(const Isometry& g);

/// Product of the factorization's reflection matrices, for replaying it.
RatMatrix reflection_product(const GramForm& form, const std::vector<Vec>& gammas);

}  // namespace unimod
