#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "unimod/orbit.hpp"

using namespace unimod;

TEST_CASE("odd escape from (0,0,1) in 2<1>+<-1> follows the Pell recurrence") {
  const GramForm f = parse_form("2<1>+<-1>");
  const EscapeTrace t = escape(f, make_vec({0, 0, 1}), 6);
  CHECK(t.kind == EscapeKind::odd);
  CHECK(t.tracked_index == 2);
  CHECK(check_escape_trace(t).empty());
  // Solutions of 2x^2 - z^2 = -1 with x = y: z runs through 1, 3, 17, 99, ...
  // with z_{k+1} = 6 z_k - z_{k-1}.
  Int before = 1, now = 3;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    CHECK(abs(t.steps[k].vector[2]) == now);
    const Int next = 6 * now - before;
    before = now;
    now = next;
  }
}

TEST_CASE("odd escape traces are exact and strictly growing") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-10, 10);
  for (const char* text : {"2<1>+<-1>", "3<1>+<-1>", "<1>+3<-1>"}) {
    const GramForm f = parse_form(text);
    for (int t = 0; t < 20; ++t) {
      Vec v(f.dim());
      do
        for (auto& x : v) x = d(rng);
      while (is_zero(v));
      const EscapeTrace tr = escape(f, v, 12);
      CAPTURE(text);
      CAPTURE(to_string(v));
      REQUIRE(check_escape_trace(tr).empty());
      std::set<Vec, VecLess> seen{v};
      Int last = abs(v[tr.tracked_index]);
      for (const auto& s : tr.steps) {
        CHECK(abs(s.vector[tr.tracked_index]) > last);
        last = abs(s.vector[tr.tracked_index]);
        CHECK(oracle::bilinear(f.gram(), s.vector, s.vector) == oracle::bilinear(f.gram(), v, v));
        CHECK(seen.insert(s.vector).second);
      }
    }
  }
}

TEST_CASE("even escape in U+E8") {
  const GramForm f = parse_form("U+E8");
  CHECK(even_escape_pivot(f) == std::optional<std::size_t>(0));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 30; ++t) {
    Vec v(f.dim());
    do
      for (auto& x : v) x = d(rng);
    while (is_zero(v));
    const EscapeTrace tr = escape(f, v, 10);
    CHECK(tr.kind == EscapeKind::even);
    CHECK(check_escape_trace(tr).empty());
    const std::size_t it = tr.tracked_index;
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
      if (tr.steps[k].case_label != 1) continue;
      const Int step = tr.vector_at(k + 1)[it] - tr.vector_at(k)[it];
      CHECK(sign(step) == tr.direction);
    }
  }
}

TEST_CASE("generic escape grows the sum of squares") {
  const GramForm f = parse_form("2U");
  const EscapeTrace tr = escape(f, make_vec({1, 1, 0, 0}), 5);
  CHECK(tr.kind == EscapeKind::generic);
  CHECK(check_escape_trace(tr).empty());
  auto sq = [](const Vec& v) -> Int {
    Int s = 0;
    for (const Int& x : v) s += x * x;
    return s;
  };
  for (std::size_t k = 1; k <= tr.steps.size(); ++k) CHECK(sq(tr.vector_at(k)) > sq(tr.vector_at(k - 1)));
}

TEST_CASE("characteristic families") {
  for (const char* text : {"2U", "2<1>+2<-1>", "2U+E8", "2<1>+2<-1>+<1>"}) {
    const GramForm f = parse_form(text);
    const int sigma = f.invariants().signature;
    for (long k = -3; k <= 3; ++k) {
      CAPTURE(text);
      CAPTURE(k);
      const auto fam = characteristic_family(f, Int(k), 15);
      REQUIRE(fam.size() == 15);
      std::set<Vec, VecLess> distinct(fam.begin(), fam.end());
      CHECK(distinct.size() == 15);
      for (const Vec& v : fam) {
        CHECK(oracle::characteristic(f.gram(), v));
        CHECK(oracle::bilinear(f.gram(), v, v) == sigma + 8 * k);
        CHECK_FALSE(is_zero(v));
      }
    }
  }
  CHECK_THROWS_AS(characteristic_family(parse_form("U+E8"), Int(0), 3), Error);
}

TEST_CASE("isotropic planes of 2U agree with a Pluecker-coordinate count") {
  const GramForm f = parse_form("2U");
  for (long bound : {1, 2, 3}) {
    const auto planes = enumerate_isotropic_planes(f, bound);
    CHECK(planes.size() == oracle::isotropic_planes_2u(bound).size());
  }
  const auto planes = enumerate_isotropic_planes(f, 3);
  CHECK(planes.size() == 32);
  std::set<IntMatrix> family;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      if (std::gcd(a, b) == 1)
        for (int variant : {1, 2}) family.insert(plane_family_2U(Int(a), Int(b), variant).normal_form());
  std::set<IntMatrix> found;
  for (const auto& p : planes) found.insert(p.normal_form());
  CHECK(found == family);
}

TEST_CASE("plane normal form does not depend on the spanning rows") {
  const GramForm f = parse_form("2U");
  const IsotropicPlane p(f, IntMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}}));
  const IsotropicPlane q(f, IntMatrix::from_rows({{1, 0, 1, 0}, {2, 0, 3, 0}}));
  CHECK(p == q);
  CHECK_THROWS_AS(IsotropicPlane(f, IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}})), Error);
}

TEST_CASE("orbit BFS stays in the box") {
  const GeneratorSet gens = wall_generators(2);
  const OrbitResult r = orbit_bfs(gens, make_vec({1, 0, 0, 0}), Int(2));
  for (const Vec& v : r.vectors) {
    CHECK(gens.form().norm(v) == 0);
    for (const Int& x : v) CHECK(abs(x) <= 2);
  }
  CHECK(std::is_sorted(r.vectors.begin(), r.vectors.end(), VecLess{}));
}

TEST_CASE("coset certificates replay") {
  const GramForm f = parse_form("<1>+2<-1>");
  const CosetCertificate c = coset_certificate(f, {make_vec({3, 1, 1})}, 12);
  CHECK(c.witnesses.size() == 12);
  CHECK(check_coset_certificate(c).empty());
  std::set<std::vector<Vec>> images(c.images.begin(), c.images.end());
  CHECK(images.size() == 12);
  // tampering is detected
  CosetCertificate bad = c;
  bad.images[3] = bad.images[4];
  CHECK_FALSE(check_coset_certificate(bad).empty());
}
