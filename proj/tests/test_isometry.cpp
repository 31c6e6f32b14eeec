#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "unimod/isometry.hpp"

using namespace unimod;

namespace {

// x - (2 x.g / g.g) g, straight from the definition.
Vec reflect(const GramForm& f, const Vec& x, const Vec& g) {
  const Int num = 2 * oracle::bilinear(f.gram(), x, g);
  const Int den = oracle::bilinear(f.gram(), g, g);
  REQUIRE(num % den == 0);
  const Int c = num / den;
  Vec out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= c * g[i];
  return out;
}

}  // namespace

TEST_CASE("isometry constructor checks the Gram matrix") {
  const GramForm u = parse_form("U");
  CHECK_NOTHROW(Isometry(u, IntMatrix::from_rows({{0, 1}, {1, 0}})));
  CHECK_THROWS_AS(Isometry(u, IntMatrix::from_rows({{1, 1}, {0, 1}})), Error);
  CHECK_THROWS_AS(Isometry(u, IntMatrix::identity(3)), Error);
}

TEST_CASE("reflections match the defining formula") {
  const GramForm f = parse_form("<1>+2<-1>");
  const Vec g = make_vec({1, 1, 1});
  const Isometry r = reflection(f, g);
  for (const Vec& x : {make_vec({3, 1, 1}), make_vec({0, 0, 1}), make_vec({-2, 5, 7})})
    CHECK(r.apply(x) == reflect(f, x, g));
  CHECK(compose(r, r) == Isometry::identity(f));
  CHECK(r.determinant() == -1);
  // norm 3: 2(e.g)/3 is not an integer
  CHECK_THROWS_AS(reflection(parse_form("3<1>"), make_vec({1, 1, 1})), Error);
  CHECK_THROWS_AS(reflection(parse_form("U"), make_vec({1, 0})), Error);
}

TEST_CASE("composition and inverse") {
  const GeneratorSet gens = wall_generators(3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Isometry g = gens.evaluate(gens.random_word(8, rng));
    const Isometry h = gens.evaluate(gens.random_word(8, rng));
    CHECK(compose(g, inverse(g)) == Isometry::identity(gens.form()));
    CHECK((compose(g, h).matrix() == g.matrix() * h.matrix()));
    CHECK(oracle::det(g.matrix()) == g.determinant());
  }
  CHECK_THROWS_AS(compose(Isometry::identity(parse_form("U")), Isometry::identity(parse_form("2U"))), Error);
}

TEST_CASE("wall generators on 3U") {
  const GeneratorSet gens = wall_generators(3);
  // 3 n, 3 s, 3 p (i<j), 6 a (i != j)
  CHECK(gens.size() == 15);
  CHECK_NOTHROW(gens.at("p13"));
  CHECK_THROWS_AS(gens.at("p31"), Error);
  CHECK(gens.evaluate({"n1", "s2"}).matrix() == gens.at("n1").matrix() * gens.at("s2").matrix());
}

TEST_CASE("component invariant on named elements") {
  const GeneratorSet gens = wall_generators(3);
  const GramForm& f = gens.form();
  CHECK(component_invariant(Isometry::identity(f)) == ComponentInvariant{1, 1});
  // s3 swaps x3, y3: det -1, fixes the positive vector x3 + y3.
  CHECK(component_invariant(gens.at("s3")) == ComponentInvariant{-1, 1});
  // n3 negates x3, y3: det +1, negates x3 + y3.
  CHECK(component_invariant(gens.at("n3")) == ComponentInvariant{1, -1});
  CHECK(component_invariant(gens.evaluate({"n3", "s3"})) == ComponentInvariant{-1, -1});
  CHECK(component_invariant(Isometry(f, -IntMatrix::identity(6))) == ComponentInvariant{1, -1});
}

TEST_CASE("spinor factorization replays to the isometry") {
  const GeneratorSet gens = wall_generators(3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Isometry g = gens.evaluate(gens.random_word(6, rng));
    const auto gammas = spinor_factorization(g);
    CHECK(gammas.size() <= 2 * g.form().dim());
    CHECK(reflection_product(g.form(), gammas) == to_rational(g.matrix()));
    int sn = 1;
    for (const Vec& v : gammas) sn *= sign(g.form().norm(v));
    CHECK(spinor_norm(g) == sn);
    // Two detectors of the component must agree.
    const ComponentInvariant c = component_invariant(g);
    CHECK(spinor_norm(g) == c.eps_det * c.eps_plus);
  }
}
