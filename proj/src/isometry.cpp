#include "unimod/isometry.hpp"

namespace unimod {

namespace {

void require_isometry(const GramForm& form, const IntMatrix& mat) {
  if (mat.rows() != form.dim() || mat.cols() != form.dim())
    throw Error(ErrorCode::dimension_mismatch, "isometry matrix shape does not match form rank");
  if (mat.transpose() * form.gram() * mat != form.gram())
    throw Error(ErrorCode::verification_failed, "matrix does not preserve the Gram matrix");
  Int d = unimod::determinant(mat);
  if (d != 1 && d != -1) throw Error(ErrorCode::verification_failed, "isometry determinant is not +-1");
}

void require_same_form(const GramForm& a, const GramForm& b) {
  if (a != b) throw Error(ErrorCode::form_mismatch, "isometries act on different forms");
}

}  // namespace

Isometry::Isometry(GramForm form, IntMatrix mat) : form_(std::move(form)), mat_(std::move(mat)) {
  require_isometry(form_, mat_);
}

Isometry Isometry::identity(const GramForm& form) {
  return Isometry(form, IntMatrix::identity(form.dim()), Trusted{});
}

int Isometry::determinant() const { return unimod::determinant(mat_).get_si(); }

Vec Isometry::apply(const Vec& v) const {
  if (v.size() != mat_.cols()) throw Error(ErrorCode::dimension_mismatch, "vector length does not match isometry");
  return mat_ * v;
}

Isometry compose(const Isometry& g, const Isometry& h) {
  require_same_form(g.form_, h.form_);
  // Closed under products; skip the re-check.
  return Isometry(g.form_, g.mat_ * h.mat_, Isometry::Trusted{});
}

Isometry inverse(const Isometry& g) {
  // M^T G M = G gives M^{-1} = G^{-1} M^T G.
  const GramForm& f = g.form_;
  if (f.is_unimodular()) {
    IntMatrix ginv = inverse_unimodular(f.gram());
    return Isometry(f, ginv * g.mat_.transpose() * f.gram(), Isometry::Trusted{});
  }
  return Isometry(f, inverse_unimodular(g.mat_), Isometry::Trusted{});
}

Vec apply(const Isometry& g, const Vec& v) { return g.apply(v); }

Isometry reflection(const GramForm& form, const Vec& gamma) {
  const std::size_t n = form.dim();
  if (gamma.size() != n) throw Error(ErrorCode::dimension_mismatch, "reflection vector length does not match form rank");
  const Int q = form.norm(gamma);
  if (q == 0) throw Error(ErrorCode::invalid_argument, "cannot reflect in an isotropic vector");
  const IntMatrix& g = form.gram();
  IntMatrix mat = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    Int pairing = 0;  // e_k . gamma
    for (std::size_t j = 0; j < n; ++j) pairing += g(k, j) * gamma[j];
    Int twice = 2 * pairing;
    if (!mpz_divisible_p(twice.get_mpz_t(), q.get_mpz_t()))
      throw Error(ErrorCode::not_integral, "reflection in " + to_string(gamma) + " is not integral on basis vector e" +
                                               std::to_string(k + 1));
    Int coeff = twice / q;
    for (std::size_t i = 0; i < n; ++i) mat(i, k) -= coeff * gamma[i];
  }
  return Isometry(form, std::move(mat));
}

RatMatrix rational_reflection(const GramForm& form, const RatVec& gamma) {
  const std::size_t n = form.dim();
  const Rat q = form.inner(gamma, gamma);
  if (q == 0) throw Error(ErrorCode::invalid_argument, "cannot reflect in an isotropic vector");
  const IntMatrix& g = form.gram();
  RatMatrix mat = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rat pairing = 0;
    for (std::size_t j = 0; j < n; ++j) pairing += g(k, j) * gamma[j];
    Rat coeff = 2 * pairing / q;
    for (std::size_t i = 0; i < n; ++i) mat(i, k) -= coeff * gamma[i];
  }
  return mat;
}

void GeneratorSet::add(std::string label, Isometry g) {
  require_same_form(form_, g.form());
  gens_.push_back({std::move(label), std::move(g)});
}

const Isometry& GeneratorSet::at(const std::string& label) const {
  for (const auto& g : gens_)
    if (g.label == label) return g.isometry;
  throw Error(ErrorCode::invalid_argument, "unknown generator label '" + label + "'");
}

Isometry GeneratorSet::evaluate(const std::vector<std::string>& word) const {
  Isometry acc = Isometry::identity(form_);
  for (const std::string& label : word) acc = compose(acc, at(label));
  return acc;
}

std::vector<std::string> GeneratorSet::random_word(std::size_t length, std::mt19937_64& rng) const {
  if (gens_.empty()) throw Error(ErrorCode::invalid_argument, "random word over an empty generator set");
  std::uniform_int_distribution<std::size_t> pick(0, gens_.size() - 1);
  std::vector<std::string> word;
  for (std::size_t i = 0; i < length; ++i) word.push_back(gens_[pick(rng)].label);
  return word;
}

GeneratorSet wall_generators(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "wall_generators needs n >= 1");
  const GramForm form(hyperbolic_gram(n));
  const std::size_t dim = 2 * static_cast<std::size_t>(n);
  auto x = [](int i) { return static_cast<std::size_t>(2 * (i - 1)); };
  auto y = [](int i) { return static_cast<std::size_t>(2 * (i - 1) + 1); };
  auto swap_cols = [](IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
  };

  GeneratorSet set(form);
  for (int i = 1; i <= n; ++i) {
    IntMatrix m = IntMatrix::identity(dim);
    m(x(i), x(i)) = -1;
    m(y(i), y(i)) = -1;
    set.add("n" + std::to_string(i), Isometry(form, m));
  }
  for (int i = 1; i <= n; ++i) {
    IntMatrix m = IntMatrix::identity(dim);
    swap_cols(m, x(i), y(i));
    set.add("s" + std::to_string(i), Isometry(form, m));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      IntMatrix m = IntMatrix::identity(dim);
      swap_cols(m, x(i), x(j));
      swap_cols(m, y(i), y(j));
      set.add("p" + std::to_string(i) + std::to_string(j), Isometry(form, m));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      // x_i -> x_i + x_j, y_j -> y_j - y_i
      IntMatrix m = IntMatrix::identity(dim);
      m(x(j), x(i)) = 1;
      m(y(i), y(j)) = -1;
      set.add("a" + std::to_string(i) + std::to_string(j), Isometry(form, m));
    }
  return set;
}

ComponentInvariant component_invariant(const Isometry& g) {
  const GramForm& form = g.form();
  const FormInvariants& inv = form.invariants();
  if (!inv.indefinite())
    throw Error(ErrorCode::not_applicable, "component invariant is only defined for indefinite forms");
  const RatMatrix conj = form.diagonalizing_basis_inverse() * to_rational(g.matrix()) * form.diagonalizing_basis();
  const std::size_t p = static_cast<std::size_t>(inv.b_plus);
  RatMatrix block(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) block(i, j) = conj(i, j);
  ComponentInvariant out;
  out.eps_det = g.determinant();
  out.eps_plus = sign(determinant(block));
  return out;
}

ComponentInvariant operator*(const ComponentInvariant& a, const ComponentInvariant& b) {
  return {a.eps_det * b.eps_det, a.eps_plus * b.eps_plus};
}

std::vector<Vec> spinor_factorization(const Isometry& g) {
  const GramForm& form = g.form();
  const RatMatrix& basis = form.diagonalizing_basis();
  const std::size_t n = form.dim();
  RatMatrix cur = to_rational(g.matrix());
  std::vector<Vec> factors;

  auto push = [&](const RatVec& gamma) {
    cur = rational_reflection(form, gamma) * cur;
    factors.push_back(primitive_multiple(gamma));
  };

  // Pivot through an orthogonal basis: after step i, cur fixes f_1..f_i.
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec f = basis.col(i);
    const RatVec u = cur * f;
    if (u == f) continue;
    RatVec d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = u[k] - f[k];
    if (form.inner(d, d) != 0) {
      push(d);
      continue;
    }
    // Isotropic difference: R_{u+f} sends u to -f, then R_f flips it back.
    RatVec w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = u[k] + f[k];
    push(w);
    push(f);
  }
  if (cur != RatMatrix::identity(n))
    throw Error(ErrorCode::verification_failed, "reflection factorization did not reach the identity");
  return factors;
}

int spinor_norm(const Isometry& g) {
  int s = 1;
  for (const Vec& gamma : spinor_factorization(g)) s *= sign(g.form().norm(gamma));
  return s;
}

RatMatrix reflection_product(const GramForm& form, const std::vector<Vec>& gammas) {
  RatMatrix acc = RatMatrix::identity(form.dim());
  for (const Vec& gamma : gammas) {
    RatVec r(gamma.begin(), gamma.end());
    acc = acc * rational_reflection(form, r);
  }
  return acc;
}

}  // namespace unimod
