// Reference computations written independently of the library code paths,
// used to cross-check library results in the tests.
#pragma once

#include <cmath>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "unimod/matrix.hpp"

namespace oracle {

using unimod::Int;
using unimod::IntMatrix;
using unimod::Vec;

// Fraction-free Gaussian elimination (Bareiss) with row swaps.
inline Int det(IntMatrix m) {
  const std::size_t n = m.rows();
  Int prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? Int(1) : Int(sgn * m(n - 1, n - 1));
}

// Eigenvalue signs of a small symmetric integer matrix by cyclic Jacobi
// rotations in double precision. Entries must be modest.
inline std::pair<int, int> inertia(const IntMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g(i, j).get_d();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  int pos = 0, neg = 0;
  for (std::size_t i = 0; i < n; ++i) (a[i][i] > 0 ? pos : neg)++;
  return {pos, neg};
}

inline bool even(const IntMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (g(i, i) % 2 != 0) return false;
  return true;
}

inline Int bilinear(const IntMatrix& g, const Vec& x, const Vec& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

// Characteristic means x.e_i = e_i.e_i mod 2 on every basis vector.
inline bool characteristic(const IntMatrix& g, const Vec& x) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Int xi = 0;
    for (std::size_t j = 0; j < g.rows(); ++j) xi += g(i, j) * x[j];
    if ((xi - g(i, i)) % 2 != 0) return false;
  }
  return true;
}

// The six 2x2 minors of a 2xn row pair, scaled to a sign-normalized key.
// Two rank-2 primitive pairs span the same saturated lattice iff the keys agree.
inline std::vector<Int> plucker_key(const Vec& u, const Vec& v) {
  std::vector<Int> p;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) p.push_back(u[i] * v[j] - u[j] * v[i]);
  for (const Int& x : p)
    if (x != 0) {
      if (x < 0)
        for (Int& y : p) y = -y;
      break;
    }
  return p;
}

inline Int gcd_all(const std::vector<Int>& xs) {
  Int g = 0;
  for (const Int& x : xs) g = gcd(g, x);
  return g;
}

// Full isotropic planes of 2U (Gram [[0,1],[1,0]] twice) with spanning
// vectors in [-bound, bound]^4, counted by their Pluecker keys.
inline std::set<std::vector<Int>> isotropic_planes_2u(long bound) {
  std::vector<Vec> iso;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d)
          if ((a || b || c || d) && a * b + c * d == 0) iso.push_back({a, b, c, d});
  std::set<std::vector<Int>> keys;
  for (std::size_t i = 0; i < iso.size(); ++i)
    for (std::size_t j = i + 1; j < iso.size(); ++j) {
      const Vec &u = iso[i], &v = iso[j];
      // u.v in 2U
      if (u[0] * v[1] + u[1] * v[0] + u[2] * v[3] + u[3] * v[2] != 0) continue;
      auto key = plucker_key(u, v);
      if (gcd_all(key) == 1) keys.insert(key);
    }
  return keys;
}

}  // namespace oracle
