#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"
#include "unimod/exterior.hpp"
#include "unimod/poly.hpp"

using namespace unimod;

namespace {

// (x1, y1, x2, y2, x3, y3) = (12, 34, 13, 42, 14, 23), 0-based.
constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {2, 3}, {0, 2}, {3, 1}, {0, 3}, {1, 2}}};

// Entry (n, m): coefficient of basis n in A e_i ^ A e_j where (i, j) is pair m.
IntMatrix minors(const IntMatrix& a) {
  IntMatrix out(6, 6);
  for (int m = 0; m < 6; ++m) {
    const auto [i, j] = kPairs[m];
    for (int n = 0; n < 6; ++n) {
      const auto [k, l] = kPairs[n];
      out(n, m) = a(k, i) * a(l, j) - a(k, j) * a(l, i);
    }
  }
  return out;
}

int perm_sign(std::array<int, 4> p) {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] == p[j])
        return 0;
      else if (p[i] > p[j])
        s = -s;
  return s;
}

}  // namespace

TEST_CASE("wedge pairing in the dictionary basis is 3U") {
  IntMatrix g(6, 6);
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 6; ++n)
      g(m, n) = perm_sign({kPairs[m][0], kPairs[m][1], kPairs[n][0], kPairs[n][1]});
  CHECK(g == three_u().gram());
  CHECK(g == hyperbolic_gram(3));
  for (int m = 0; m < 6; ++m) {
    CHECK(basis_dictionary()[m].i - 1 == kPairs[m][0]);
    CHECK(basis_dictionary()[m].j - 1 == kPairs[m][1]);
  }
}

TEST_CASE("exterior square agrees with direct minors") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix a = random_sl4_word(rng, 12);
    const IntMatrix b = random_sl4_word(rng, 12);
    CHECK(oracle::det(a) == 1);
    const IntMatrix l = exterior_square(a);
    CHECK(l == minors(a));
    CHECK(l.transpose() * three_u().gram() * l == three_u().gram());
    CHECK(exterior_square(a * b) == l * exterior_square(b));
    CHECK(functoriality_check(a, b));
    CHECK(exterior_square(-a) == l);
  }
  // Cauchy-Binet style identity for rank 2: det Lambda^2(A) = det(A)^3.
  const IntMatrix m = IntMatrix::from_rows({{2, 1, 0, 0}, {0, 1, 3, 0}, {1, 0, 1, 1}, {0, 2, 0, 1}});
  const Int d = oracle::det(m);
  CHECK(oracle::det(exterior_square(m)) == d * d * d);
}

TEST_CASE("lambda2 report") {
  const Lambda2Report id = lambda2(IntMatrix::identity(4));
  CHECK(id.output == IntMatrix::identity(6));
  CHECK(id.gram_preserved);
  REQUIRE(id.component);
  CHECK(*id.component == ComponentInvariant{1, 1});
  // det -1 reverses the pairing, so the output is not an isometry of 3U.
  const Lambda2Report flip = lambda2(IntMatrix::from_rows({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_FALSE(flip.gram_preserved);
  CHECK_FALSE(flip.component);
  CHECK_THROWS_AS(lambda2(IntMatrix::identity(3)), Error);
}

TEST_CASE("base matrices") {
  const auto& bases = base_preimages();
  // n1 n2 negates x1, y1, x2, y2 and fixes x3, y3.
  IntMatrix n1n2 = IntMatrix::identity(6);
  for (int i = 0; i < 4; ++i) n1n2(i, i) = -1;
  CHECK(bases[0].image == "n1n2");
  CHECK(exterior_square(bases[0].matrix) == n1n2);
  CHECK(wall_element("n1n2") == n1n2);
  for (const auto& b : bases) {
    CAPTURE(b.image);
    CHECK(oracle::det(b.matrix) == 1);
    CHECK(exterior_square(b.matrix) == wall_element(b.image));
  }
}

TEST_CASE("relation suite holds on every instance") {
  const auto verdicts = relation_suite();
  CHECK(verdicts.size() == 96);
  for (const auto& v : verdicts) {
    CAPTURE(v.instance);
    CHECK(v.holds);
  }
}

TEST_CASE("generators of N have preimages") {
  const auto gens = n_subgroup_generators();
  CHECK(gens.size() == 30);
  for (const auto& g : gens) {
    CAPTURE(g.label);
    CHECK(oracle::det(g.preimage) == 1);
    CHECK(exterior_square(g.preimage) == g.element);
    CHECK(wall_element(g.label) == g.element);
  }
}

TEST_CASE("index lower bound certificate") {
  const IndexCertificate c = index_lower_bound_certificate(200, 4);
  CHECK(c.holds);
  CHECK(c.values_distinct);
  CHECK(c.coset_values.size() == 4);
  CHECK(c.nontrivial_samples == 0);
  CHECK(c.samples == 200);
}

TEST_CASE("non-realizability replay") {
  for (const char* target : {"n3", "s3", "n3s3"}) {
    CAPTURE(target);
    const ReplayTrace t = non_realizability_replay(target);
    CHECK(t.closed);
    CHECK(t.forced_image == IntMatrix::identity(6));
    CHECK(t.target_matrix == wall_element(target));
    CHECK(t.target_matrix != t.forced_image);
    CHECK(t.steps.size() >= 4);
  }
  CHECK_THROWS_AS(non_realizability_replay("n1"), Error);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::var(0), y = Polynomial::var(1);
  const Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK((p - x * x + y * y).is_zero());
  CHECK(p.substitute({{0, Rat(3)}, {1, Rat(2)}}) == Polynomial::constant(Rat(5)));
}
