#include "unimod/arith.hpp"

#include <sstream>

namespace unimod {

Vec make_vec(std::initializer_list<long> values) {
  Vec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Vec make_vec(const std::vector<std::int64_t>& values) {
  Vec v;
  v.reserve(values.size());
  for (std::int64_t x : values) v.emplace_back(static_cast<long>(x));
  return v;
}

Int content(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) {
    Int t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    g = t;
  }
  return g;
}

bool is_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Vec negate(const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "vector sum dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec scale(const Vec& v, const Int& c) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

Vec primitive_multiple(const RatVec& v) {
  Int denom = 1;
  for (const Rat& x : v) {
    Int t;
    mpz_lcm(t.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
    denom = t;
  }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * denom;
    out[i] = scaled.get_num();
  }
  Int g = content(out);
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace unimod
