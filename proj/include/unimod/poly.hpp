#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "unimod/arith.hpp"

namespace unimod {

/// Sparse multivariate polynomial over Q. A monomial is the sorted list of
/// its variable indices (with repetition).
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  Polynomial() = default;
  static Polynomial constant(const Rat& c);
  static Polynomial var(int index);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  /// Replaces the listed variables by values.
  Polynomial substitute(const std::map<int, Rat>& values) const;

  /// Splits into coefficients of monomials in the variables selected by
  /// `outer`; the coefficients are polynomials in the rest.
  std::map<Monomial, Polynomial> collect(const std::function<bool(int)>& outer) const;

  std::string str(const std::function<std::string(int)>& name) const;

 private:
  void add(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> terms_;
};

}  // namespace unimod
