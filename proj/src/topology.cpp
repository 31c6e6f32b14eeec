#include "unimod/topology.hpp"

#include <bit>
#include <random>

#include "unimod/poly.hpp"

namespace unimod {

std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::minus_infinity: return "-inf";
    case Kodaira::zero: return "0";
    case Kodaira::one: return "1";
    case Kodaira::two: return "2";
  }
  return "?";
}

Kodaira kodaira_dimension(const Int& k_dot_omega, const Int& k_squared) {
  if (k_dot_omega < 0 || k_squared < 0) return Kodaira::minus_infinity;
  if (k_dot_omega == 0 && k_squared == 0) return Kodaira::zero;
  if (k_dot_omega > 0 && k_squared == 0) return Kodaira::one;
  if (k_dot_omega > 0 && k_squared > 0) return Kodaira::two;
  throw Error(ErrorCode::inconsistent_input, "K.[w] = 0 with K.K > 0 is not a possible minimal symplectic manifold");
}

Int canonical_norm(const Int& chi, const Int& sigma) { return 2 * chi + 3 * sigma; }

const std::vector<CYTableRow>& cy_table() {
  static const std::vector<CYTableRow> rows{
      {"K3 surface", 0, 22, 3, 24, -16},
      {"Enriques surface", 0, 10, 1, 12, -8},
      {"4-torus", 4, 6, 3, 0, 0},
      {"T^2-bundle over T^2", 3, 4, 2, 0, 0},
      {"T^2-bundle over T^2", 2, 2, 1, 0, 0},
  };
  return rows;
}

namespace {

// Exterior algebra on e1..e4; a monomial is a bit mask, a form a map mask -> coeff.
using ExtForm = std::map<unsigned, Rat>;

// Sign of moving the wedge a ^ b into increasing order; 0 if they overlap.
int wedge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int j = 0; j < 4; ++j)
    if (b >> j & 1u) swaps += std::popcount(a >> (j + 1));
  return swaps % 2 ? -1 : 1;
}

ExtForm wedge(const ExtForm& f, const ExtForm& g) {
  ExtForm out;
  for (const auto& [ma, ca] : f)
    for (const auto& [mb, cb] : g) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out[ma | mb] += s * ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

ExtForm mono(unsigned mask, const Rat& c = 1) { return c == 0 ? ExtForm{} : ExtForm{{mask, c}}; }

// d e3 = lambda e1^e2, extended as an antiderivation.
ExtForm differential(const ExtForm& f, long lambda) {
  ExtForm out;
  const unsigned e3 = 1u << 2, e12 = 0b0011u;
  for (const auto& [m, c] : f) {
    if (!(m & e3)) continue;
    const unsigned before = m & (e3 - 1), after = m & ~(2 * e3 - 1);
    const int p = std::popcount(before) % 2 ? -1 : 1;
    const ExtForm term = wedge(wedge(mono(before), mono(e12, Rat(lambda))), mono(after));
    for (const auto& [mt, ct] : term) out[mt] += p * c * ct;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

const std::array<unsigned, 6> kTwoBasis{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
const std::array<unsigned, 4> kThreeBasis{0b0111, 0b1011, 0b1101, 0b1110};

RatVec two_coords(const ExtForm& f) {
  RatVec out(6, Rat(0));
  for (std::size_t k = 0; k < 6; ++k)
    if (auto it = f.find(kTwoBasis[k]); it != f.end()) out[k] = it->second;
  return out;
}

}  // namespace

KTAlgebra kt_algebra(long lambda) {
  if (lambda == 0) throw Error(ErrorCode::invalid_argument, "lambda = 0 gives the 4-torus, not a Kodaira-Thurston manifold");
  KTAlgebra alg;
  alg.lambda = lambda;
  const unsigned e1 = 1, e2 = 2, e3 = 4, e4 = 8;
  const std::array<ExtForm, 4> f{
      wedge(mono(e1), mono(e4)),
      wedge(mono(e2), mono(e3)),
      wedge(mono(e2), mono(e4)),
      wedge(mono(e3), mono(e1)),
  };
  for (std::size_t i = 0; i < 4; ++i) {
    const RatVec c = two_coords(f[i]);
    alg.two_forms[i] = Vec(6);
    for (std::size_t k = 0; k < 6; ++k) alg.two_forms[i][k] = c[k].get_num();
  }
  alg.h2_gram = IntMatrix(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const ExtForm top = wedge(f[i], f[j]);
      alg.h2_gram(i, j) = top.empty() ? Int(0) : top.begin()->second.get_num();
    }

  // Matrix of d : Lambda^2 -> Lambda^3.
  RatMatrix d2(4, 6);
  for (std::size_t k = 0; k < 6; ++k) {
    const ExtForm img = differential(mono(kTwoBasis[k]), lambda);
    for (std::size_t r = 0; r < 4; ++r)
      if (auto it = img.find(kThreeBasis[r]); it != img.end()) d2(r, k) = it->second;
  }
  alg.closed = true;
  for (const ExtForm& fi : f)
    if (!differential(fi, lambda).empty()) alg.closed = false;

  // Closed 2-forms have dimension 6 - rank(d2); F1..F4 and e1^e2 must span them.
  IntMatrix d2i(4, 6);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 6; ++k) d2i(r, k) = d2(r, k).get_num();
  const std::size_t kernel_dim = 6 - rank(d2i);
  IntMatrix span(5, 6);
  for (std::size_t i = 0; i < 4; ++i) span.set_row(i, alg.two_forms[i]);
  span(4, 0) = 1;  // e1^e2 = d(e3) / lambda
  const ExtForm exact = differential(mono(e3), lambda);
  alg.spans_h2 = alg.closed && rank(span) == kernel_dim && exact == mono(0b0011, Rat(lambda));
  return alg;
}

WedgeImage wedge_image(const KTAlgebra& alg) {
  const unsigned e1 = 1, e2 = 2, e4 = 8;
  const std::array<std::pair<std::string, unsigned>, 3> h1{{{"dx", e1}, {"dy", e2}, {"dt", e4}}};
  for (const auto& [name, m] : h1)
    if (!differential(mono(m), alg.lambda).empty())
      throw Error(ErrorCode::verification_failed, name + " is not closed");

  // Columns F1..F4 and the exact form e1^e2.
  RatMatrix basis(6, 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 6; ++k) basis(k, i) = alg.two_forms[i][k];
  basis(0, 4) = 1;

  std::vector<std::pair<std::string, Vec>> products;
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < h1.size(); ++a)
    for (std::size_t b = a + 1; b < h1.size(); ++b) {
      const RatVec w = two_coords(wedge(mono(h1[a].second), mono(h1[b].second)));
      const auto sol = solve_linear(basis, w);
      if (!sol) throw Error(ErrorCode::verification_failed, "a wedge product is not closed");
      Vec coords(4);
      for (std::size_t i = 0; i < 4; ++i) {
        if ((*sol)[i].get_den() != 1) throw Error(ErrorCode::verification_failed, "non-integral F-coordinates");
        coords[i] = (*sol)[i].get_num();
      }
      if (!is_zero(coords)) rows.push_back(coords);
      products.push_back({h1[a].first + "^" + h1[b].first, std::move(coords)});
    }
  IntMatrix stacked(rows.size(), 4);
  for (std::size_t r = 0; r < rows.size(); ++r) stacked.set_row(r, rows[r]);
  IntMatrix hnf = row_hermite_form(stacked);
  if (hnf.rows() != 2) throw Error(ErrorCode::verification_failed, "wedge image does not have rank 2");
  return {std::move(products), IsotropicPlane(GramForm(alg.h2_gram), std::move(hnf))};
}

RatVec kt_multiply(long lambda, const RatVec& g, const RatVec& h) {
  return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + lambda * g[0] * h[1], g[3] + h[3]};
}

RatVec apply_phi(const PhiT& phi, const RatVec& g) {
  const Rat x = g[0], y = g[1];
  const Rat det = Rat(determinant(phi.t));
  const Rat quad = x * x * phi.b(0, 0) + x * y * (phi.b(0, 1) + phi.b(1, 0)) + y * y * phi.b(1, 1);
  return {x * phi.t(0, 0) + y * phi.t(1, 0), x * phi.t(0, 1) + y * phi.t(1, 1),
          det * g[2] + quad + x * phi.v[0] + y * phi.v[1], g[3]};
}

namespace {

// Variables: 0..3 the point (x, y, z, t); 4..7 B by rows; 8..23 the image
// generators l'_g (4 per generator); 24, 25 the shift v.
constexpr int kB = 4, kImg = 8, kV = 24, kUnknowns = 22;

using PolyVec = std::array<Polynomial, 4>;

PolyVec sym_multiply(long lambda, const PolyVec& g, const PolyVec& h) {
  return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + Polynomial::constant(lambda) * g[0] * h[1], g[3] + h[3]};
}

PolyVec sym_phi(const IntMatrix& t, const PolyVec& g) {
  auto c = [](const Int& v) { return Polynomial::constant(Rat(v)); };
  auto var = Polynomial::var;
  const Polynomial& x = g[0];
  const Polynomial& y = g[1];
  const Polynomial quad = x * x * var(kB) + x * y * (var(kB + 1) + var(kB + 2)) + y * y * var(kB + 3);
  return {x * c(t(0, 0)) + y * c(t(1, 0)), x * c(t(0, 1)) + y * c(t(1, 1)),
          c(determinant(t)) * g[2] + quad + x * var(kV) + y * var(kV + 1), g[3]};
}

// Residuals phi(l X) - l' phi(X) for each unit generator l.
std::vector<Polynomial> residuals(long lambda, const IntMatrix& t) {
  const PolyVec point{Polynomial::var(0), Polynomial::var(1), Polynomial::var(2), Polynomial::var(3)};
  std::vector<Polynomial> out;
  for (int g = 0; g < 4; ++g) {
    PolyVec l;
    for (int c = 0; c < 4; ++c) l[c] = Polynomial::constant(c == g ? 1 : 0);
    PolyVec image;
    for (int c = 0; c < 4; ++c) image[c] = Polynomial::var(kImg + 4 * g + c);
    const PolyVec lhs = sym_phi(t, sym_multiply(lambda, l, point));
    const PolyVec rhs = sym_multiply(lambda, image, sym_phi(t, point));
    for (int c = 0; c < 4; ++c) out.push_back(lhs[c] - rhs[c]);
  }
  return out;
}

std::optional<RatVec> solve_with(const std::vector<Polynomial>& res, const std::map<int, Rat>& fixed) {
  std::vector<RatVec> rows;
  RatVec rhs;
  for (const Polynomial& r : res)
    for (const auto& [mono, coeff] : r.collect([](int v) { return v < 4; })) {
      (void)mono;
      if (coeff.degree() > 1) throw Error(ErrorCode::verification_failed, "normalizer condition is not linear in B");
      RatVec row(kUnknowns, Rat(0));
      Rat constant = 0;
      for (const auto& [m, c] : coeff.terms()) {
        if (m.empty())
          constant = c;
        else
          row[m[0] - kB] = c;
      }
      rows.push_back(std::move(row));
      rhs.push_back(-constant);
    }
  for (const auto& [var, value] : fixed) {
    RatVec row(kUnknowns, Rat(0));
    row[var - kB] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(value);
  }
  RatMatrix m(rows.size(), kUnknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < kUnknowns; ++c) m(r, c) = rows[r][c];
  return solve_linear(m, rhs);
}

bool integral_images(const RatVec& sol) {
  for (int k = kImg; k < kV; ++k)
    if (sol[k - kB].get_den() != 1) return false;
  return true;
}

}  // namespace

PhiT solve_phi_T(long lambda, const IntMatrix& t, std::uint64_t seed) {
  if (lambda == 0) throw Error(ErrorCode::invalid_argument, "lambda must be nonzero");
  if (t.rows() != 2 || t.cols() != 2) throw Error(ErrorCode::dimension_mismatch, "T must be 2x2");
  const Int det = determinant(t);
  if (det != 1 && det != -1) throw Error(ErrorCode::invalid_argument, "T must have determinant +-1");

  const std::vector<Polynomial> res = residuals(lambda, t);
  auto sol = solve_with(res, {{kV, 0}, {kV + 1, 0}});
  if (!sol) throw Error(ErrorCode::verification_failed, "no rational B normalizes the lattice");
  if (!integral_images(*sol)) {
    // Shift by a linear term so that each image generator is integral.
    auto shift = [&](int diag) -> Rat {
      const Rat& bii = (*sol)[diag - kB];
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), bii.get_num_mpz_t(), bii.get_den_mpz_t());
      return Rat(fl) - bii;
    };
    sol = solve_with(res, {{kV, shift(kB)}, {kV + 1, shift(kB + 3)}});
    if (!sol || !integral_images(*sol))
      throw Error(ErrorCode::verification_failed, "no shift makes the image generators integral");
  }

  PhiT phi;
  phi.lambda = lambda;
  phi.t = t;
  phi.b = RatMatrix(2, 2);
  for (int k = 0; k < 4; ++k) phi.b(k / 2, k % 2) = (*sol)[k];
  phi.v = {(*sol)[kV - kB], (*sol)[kV + 1 - kB]};
  for (int g = 0; g < 4; ++g) {
    phi.images[g] = Vec(4);
    for (int c = 0; c < 4; ++c) phi.images[g][c] = (*sol)[kImg + 4 * g + c - kB].get_num();
  }

  std::map<int, Rat> values;
  for (int k = kB; k < kB + kUnknowns; ++k) values[k] = (*sol)[k - kB];
  phi.polynomial_identity = true;
  for (const Polynomial& r : res)
    if (!r.substitute(values).is_zero()) phi.polynomial_identity = false;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-50, 50), den(1, 7);
  phi.sample_points = true;
  for (int s = 0; s < 20; ++s) {
    RatVec point(4);
    for (auto& c : point) {
      c = Rat(coord(rng), den(rng));
      c.canonicalize();
    }
    for (int g = 0; g < 4; ++g) {
      RatVec l(4, Rat(0));
      l[g] = 1;
      const RatVec img(phi.images[g].begin(), phi.images[g].end());
      if (apply_phi(phi, kt_multiply(lambda, l, point)) != kt_multiply(lambda, img, apply_phi(phi, point)))
        phi.sample_points = false;
    }
  }
  return phi;
}

PlaneOrbit kt_infinite_index_witness(std::size_t n, std::size_t max_depth) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be at least 1");
  const GeneratorSet gens = wall_generators(2);
  const IsotropicPlane start(gens.form(), IntMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}}));
  PlaneOrbit orbit = plane_orbit_bfs(gens, start, n, max_depth);
  if (orbit.planes.size() < n)
    throw Error(ErrorCode::budget_exhausted, "only " + std::to_string(orbit.planes.size()) + " distinct planes within depth " +
                                                 std::to_string(max_depth));
  return orbit;
}

}  // namespace unimod
