#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "unimod/arith.hpp"
#include "unimod/matrix.hpp"

namespace unimod {

enum class Parity { even, odd };

/// min{b+, b-} = 0, 1, >= 2.
enum class Definiteness { definite, nearly_definite, strongly_indefinite };

struct FormInvariants {
  int rank = 0;
  int b_plus = 0;
  int b_minus = 0;
  int signature = 0;
  Parity parity = Parity::even;
  Definiteness definiteness = Definiteness::definite;
  /// Kept apart from `definiteness`: U is nearly definite by the min{b+,b-}
  /// rule, yet its automorphism group is finite (indefinite of rank 2).
  bool finite_automorphism_group = true;

  bool indefinite() const { return b_plus > 0 && b_minus > 0; }
  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

std::string to_string(Parity p);
std::string to_string(Definiteness d);

/// m<1> + n<-1> + pU + qE8, with q < 0 meaning |q| copies of -E8.
struct StandardSpec {
  int ones = 0;
  int minus_ones = 0;
  int hyperbolic = 0;
  int e8 = 0;

  int rank() const;
  friend bool operator==(const StandardSpec&, const StandardSpec&) = default;
};

std::string describe(const StandardSpec& spec);

enum class BlockKind { plus_one, minus_one, hyperbolic, neg_hyperbolic, e8, neg_e8 };

struct FormBlock {
  BlockKind kind;
  int count = 1;
};

/// A symmetric integer bilinear form on Z^dim, i.e. the lattice together with
/// its Gram matrix. Immutable; copies share the cached data.
class GramForm {
 public:
  explicit GramForm(IntMatrix gram);

  std::size_t dim() const;
  const IntMatrix& gram() const;
  const Int& determinant() const;
  bool is_degenerate() const;
  bool is_unimodular() const;

  /// Throws degenerate_form for det 0.
  const FormInvariants& invariants() const;

  /// Columns form a rational basis f_1..f_n with f_i . f_j = 0 for i != j;
  /// the b+ positive vectors come first.
  const RatMatrix& diagonalizing_basis() const;
  const RatMatrix& diagonalizing_basis_inverse() const;
  const std::vector<Rat>& diagonal() const;

  Int inner(const Vec& x, const Vec& y) const;
  Rat inner(const RatVec& x, const RatVec& y) const;
  Int norm(const Vec& x) const { return inner(x, x); }

  GramForm negated() const;

  friend bool operator==(const GramForm& a, const GramForm& b);
  friend bool operator!=(const GramForm& a, const GramForm& b) { return !(a == b); }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

IntMatrix e8_cartan();
IntMatrix hyperbolic_gram(int copies);

/// Block-diagonal form in the fixed order: <1> blocks, <-1> blocks, U blocks, E8 blocks.
GramForm make_standard(const StandardSpec& spec);
GramForm block_sum(const std::vector<FormBlock>& blocks);
GramForm direct_sum(const GramForm& a, const GramForm& b);

/// Shorthand such as "2<1>+<-1>", "3U", "U+E8", "2U+2(-E8)". Blocks are laid
/// out in the order written.
GramForm parse_form(std::string_view text);

/// The 240 vectors of norm 2 in E8, in simple-root coordinates, sorted.
const std::vector<Vec>& e8_roots();

FormInvariants invariants(const GramForm& form);

/// The standard representative sharing rank, signature and parity.
/// Indefinite input only; even type needs signature = 0 mod 8.
StandardSpec canonical_spec(const FormInvariants& inv);
GramForm canonical_representative(const FormInvariants& inv);

Int norm(const GramForm& form, const Vec& v);
bool is_characteristic(const GramForm& form, const Vec& v);
/// Throws invalid_argument for the zero vector.
bool is_primitive(const Vec& v);

/// Some characteristic vector with 0/1 coordinates (solved mod 2).
Vec characteristic_vector(const GramForm& form);

/// True iff the two rows are pairwise orthogonal isotropic vectors spanning a
/// saturated rank-2 sublattice (both elementary divisors equal to 1).
bool is_full_isotropic_plane(const GramForm& form, const IntMatrix& rows);

}  // namespace unimod
