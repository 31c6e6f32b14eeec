#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unimod {

using Int = mpz_class;
using Rat = mpq_class;

/// Coordinates of a lattice vector in the chosen basis of its form.
using Vec = std::vector<Int>;
using RatVec = std::vector<Rat>;

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  degenerate_form,
  not_applicable,
  form_mismatch,
  not_integral,
  inconsistent_input,
  budget_exhausted,
  verification_failed,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

Vec make_vec(std::initializer_list<long> values);
Vec make_vec(const std::vector<std::int64_t>& values);

/// gcd of all coordinates; 0 for the zero vector.
Int content(const Vec& v);
bool is_zero(const Vec& v);
Vec negate(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const Int& c);

/// Clears denominators and divides out the content; sign is kept.
Vec primitive_multiple(const RatVec& v);

std::string to_string(const Vec& v);

}  // namespace unimod
