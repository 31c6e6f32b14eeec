#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "oracles.hpp"
#include "unimod/topology.hpp"

using namespace unimod;

namespace {

// Order 12, 13, 14, 23, 24, 34 on e_i ^ e_j, 0-based.
constexpr std::array<std::array<int, 2>, 6> kTwo{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Coefficient of e1^e2^e3^e4 in a ^ b.
Int wedge_top(const Vec& a, const Vec& b) {
  Int s = 0;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      const std::array<int, 4> idx{kTwo[p][0], kTwo[p][1], kTwo[q][0], kTwo[q][1]};
      int sg = 1;
      bool distinct = true;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          if (idx[i] == idx[j]) distinct = false;
          if (idx[i] > idx[j]) sg = -sg;
        }
      if (distinct) s += sg * a[p] * b[q];
    }
  return s;
}

// Group law of the Heisenberg-type group with shear lambda.
std::array<Rat, 4> mul(long lambda, const std::array<Rat, 4>& g, const std::array<Rat, 4>& h) {
  return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + Rat(lambda) * g[0] * h[1], g[3] + h[3]};
}

std::array<Rat, 4> phi(const PhiT& p, const std::array<Rat, 4>& g) {
  const Rat x = g[0], y = g[1];
  const Rat det = Rat(p.t(0, 0) * p.t(1, 1) - p.t(0, 1) * p.t(1, 0));
  const Rat quad = x * x * p.b(0, 0) + x * y * (p.b(0, 1) + p.b(1, 0)) + y * y * p.b(1, 1);
  return {x * Rat(p.t(0, 0)) + y * Rat(p.t(1, 0)), x * Rat(p.t(0, 1)) + y * Rat(p.t(1, 1)),
          det * g[2] + quad + x * p.v[0] + y * p.v[1], g[3]};
}

Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::array<Rat, 4> to_arr(const Vec& v) { return {Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])}; }

}  // namespace

TEST_CASE("Kodaira dimension table") {
  CHECK(kodaira_dimension(Int(-3), Int(5)) == Kodaira::minus_infinity);
  CHECK(kodaira_dimension(Int(4), Int(-1)) == Kodaira::minus_infinity);
  CHECK(kodaira_dimension(Int(0), Int(0)) == Kodaira::zero);
  CHECK(kodaira_dimension(Int(2), Int(0)) == Kodaira::one);
  CHECK(kodaira_dimension(Int(2), Int(7)) == Kodaira::two);
  CHECK(kodaira_dimension(Int(0), Int(-2)) == Kodaira::minus_infinity);
  try {
    (void)kodaira_dimension(Int(0), Int(1));
    FAIL("expected inconsistent_input");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::inconsistent_input);
  }
  CHECK(to_string(Kodaira::minus_infinity) == "-inf");
}

TEST_CASE("canonical class norm and the CY table") {
  CHECK(canonical_norm(Int(24), Int(-16)) == 0);  // K3
  CHECK(canonical_norm(Int(3), Int(1)) == 9);     // CP^2
  CHECK(cy_table().size() == 5);
  for (const auto& r : cy_table()) {
    CAPTURE(r.label);
    CHECK(r.chi == 2 - 2 * r.b1 + r.b2);
    CHECK(r.sigma == 2 * r.b_plus - r.b2);
    CHECK(2 * r.chi + 3 * r.sigma == 0);
  }
}

TEST_CASE("Kodaira-Thurston invariant forms") {
  for (long lambda : {-3, -2, -1, 1, 2, 3}) {
    CAPTURE(lambda);
    const KTAlgebra alg = kt_algebra(lambda);
    CHECK(alg.closed);
    CHECK(alg.spans_h2);
    IntMatrix g(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g(i, j) = wedge_top(alg.two_forms[i], alg.two_forms[j]);
    CHECK(g == alg.h2_gram);
    CHECK(g == hyperbolic_gram(2));
    const WedgeImage w = wedge_image(alg);
    CHECK(w.plane.normal_form() == IsotropicPlane(parse_form("2U"), IntMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}})).normal_form());
  }
  CHECK_THROWS_AS(kt_algebra(0), Error);
}

TEST_CASE("phi_T normalizes the lattice") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-9, 9);
  const std::vector<IntMatrix> ts{IntMatrix::from_rows({{1, 1}, {0, 1}}), IntMatrix::from_rows({{0, 1}, {1, 0}}),
                                  IntMatrix::from_rows({{-1, 0}, {0, -1}}), IntMatrix::from_rows({{2, 1}, {1, 1}}),
                                  IntMatrix::from_rows({{1, 0}, {3, -1}})};
  for (long lambda : {1, 2, -3}) {
    for (const IntMatrix& t : ts) {
      CAPTURE(lambda);
      const PhiT p = solve_phi_T(lambda, t, 1);
      CHECK(p.polynomial_identity);
      CHECK(p.sample_points);
      for (int trial = 0; trial < 5; ++trial) {
        const std::array<Rat, 4> g{frac(d(rng), 3), frac(d(rng), 5), frac(d(rng), 7), Rat(d(rng))};
        for (int i = 0; i < 4; ++i) {
          std::array<Rat, 4> unit{0, 0, 0, 0};
          unit[i] = 1;
          CHECK(phi(p, mul(lambda, unit, g)) == mul(lambda, to_arr(p.images[i]), phi(p, g)));
        }
      }
    }
  }
  CHECK_THROWS_AS(solve_phi_T(1, IntMatrix::from_rows({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("infinite index witness") {
  const PlaneOrbit w = kt_infinite_index_witness(12);
  CHECK(w.planes.size() == 12);
  std::set<IntMatrix> distinct;
  for (std::size_t i = 0; i < w.planes.size(); ++i) {
    distinct.insert(w.planes[i].normal_form());
    CHECK(w.planes[i] == IsotropicPlane(parse_form("2U"), IntMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}})).transformed(w.witnesses[i]));
  }
  CHECK(distinct.size() == 12);
}
