#include "unimod/form.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <set>

namespace unimod {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::definite: return "definite";
    case Definiteness::nearly_definite: return "nearly_definite";
    case Definiteness::strongly_indefinite: return "strongly_indefinite";
  }
  return "unknown";
}

int StandardSpec::rank() const {
  return ones + minus_ones + 2 * hyperbolic + 8 * (e8 < 0 ? -e8 : e8);
}

std::string describe(const StandardSpec& spec) {
  std::string out;
  auto term = [&out](int count, const std::string& atom) {
    if (count == 0) return;
    if (!out.empty()) out += "+";
    if (count != 1) out += std::to_string(count);
    out += atom;
  };
  term(spec.ones, "<1>");
  term(spec.minus_ones, "<-1>");
  term(spec.hyperbolic, "U");
  if (spec.e8 > 0) term(spec.e8, "E8");
  if (spec.e8 < 0) term(-spec.e8, "(-E8)");
  return out.empty() ? "0" : out;
}

struct GramForm::Data {
  IntMatrix gram;
  Int det;
  bool diagonalized = false;
  FormInvariants inv;
  RatMatrix basis;
  RatMatrix basis_inv;
  std::vector<Rat> diag;
};

namespace {

// Symmetric elimination over Q: returns P (columns) with P^T G P diagonal.
void diagonalize(const IntMatrix& gram, RatMatrix& basis, std::vector<Rat>& diag) {
  const std::size_t n = gram.rows();
  RatMatrix a = to_rational(gram);
  RatMatrix p = RatMatrix::identity(n);

  auto swap_basis = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a(i, r), a(j, r));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
  };
  // e_i += f * e_j
  auto add_basis = [&](std::size_t i, std::size_t j, const Rat& f) {
    for (std::size_t r = 0; r < n; ++r) a(i, r) += f * a(j, r);
    for (std::size_t r = 0; r < n; ++r) a(r, i) += f * a(r, j);
    for (std::size_t r = 0; r < n; ++r) p(r, i) += f * p(r, j);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(k, j) == 0) ++j;
      if (j == n) throw Error(ErrorCode::degenerate_form, "form is degenerate");
      if (a(j, j) != 0)
        swap_basis(k, j);
      else
        add_basis(k, j, Rat(1));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = -a(i, k) / a(k, k);
      add_basis(i, k, f);
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return a(i, i) > 0; });
  basis = RatMatrix(n, n);
  diag.assign(n, Rat(0));
  for (std::size_t c = 0; c < n; ++c) {
    basis.set_col(c, p.col(order[c]));
    diag[c] = a(order[c], order[c]);
  }
}

}  // namespace

GramForm::GramForm(IntMatrix gram) {
  if (gram.rows() == 0) throw Error(ErrorCode::invalid_argument, "form of rank 0");
  if (!gram.is_square()) throw Error(ErrorCode::invalid_argument, "Gram matrix is not square");
  if (!gram.is_symmetric()) throw Error(ErrorCode::invalid_argument, "Gram matrix is not symmetric");
  auto d = std::make_shared<Data>();
  d->det = unimod::determinant(gram);
  d->gram = std::move(gram);
  if (d->det != 0) {
    diagonalize(d->gram, d->basis, d->diag);
    d->basis_inv = *inverse(d->basis);
    FormInvariants& inv = d->inv;
    inv.rank = static_cast<int>(d->gram.rows());
    for (const Rat& x : d->diag) (x > 0 ? inv.b_plus : inv.b_minus)++;
    inv.signature = inv.b_plus - inv.b_minus;
    inv.parity = Parity::even;
    for (std::size_t i = 0; i < d->gram.rows(); ++i)
      if (mpz_odd_p(d->gram(i, i).get_mpz_t())) inv.parity = Parity::odd;
    const int m = std::min(inv.b_plus, inv.b_minus);
    inv.definiteness = m == 0   ? Definiteness::definite
                       : m == 1 ? Definiteness::nearly_definite
                                : Definiteness::strongly_indefinite;
    inv.finite_automorphism_group = m == 0 || inv.rank == 2;
    d->diagonalized = true;
  }
  data_ = std::move(d);
}

std::size_t GramForm::dim() const { return data_->gram.rows(); }
const IntMatrix& GramForm::gram() const { return data_->gram; }
const Int& GramForm::determinant() const { return data_->det; }
bool GramForm::is_degenerate() const { return data_->det == 0; }
bool GramForm::is_unimodular() const { return data_->det == 1 || data_->det == -1; }

const FormInvariants& GramForm::invariants() const {
  if (!data_->diagonalized) throw Error(ErrorCode::degenerate_form, "form is degenerate (det 0)");
  return data_->inv;
}

const RatMatrix& GramForm::diagonalizing_basis() const {
  invariants();
  return data_->basis;
}

const RatMatrix& GramForm::diagonalizing_basis_inverse() const {
  invariants();
  return data_->basis_inv;
}

const std::vector<Rat>& GramForm::diagonal() const {
  invariants();
  return data_->diag;
}

Int GramForm::inner(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::dimension_mismatch,
                "vector length " + std::to_string(x.size() != n ? x.size() : y.size()) +
                    " does not match form rank " + std::to_string(n));
  const IntMatrix& g = data_->gram;
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0 && g(i, j) != 0) row += g(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

Rat GramForm::inner(const RatVec& x, const RatVec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::dimension_mismatch, "vector length mismatch");
  const IntMatrix& g = data_->gram;
  Rat acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) != 0) acc += x[i] * g(i, j) * y[j];
  return acc;
}

GramForm GramForm::negated() const { return GramForm(-data_->gram); }

bool operator==(const GramForm& a, const GramForm& b) {
  return a.data_ == b.data_ || a.data_->gram == b.data_->gram;
}

IntMatrix e8_cartan() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  IntMatrix c(8, 8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
  const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    c(e[0] - 1, e[1] - 1) = -1;
    c(e[1] - 1, e[0] - 1) = -1;
  }
  return c;
}

IntMatrix hyperbolic_gram(int copies) {
  IntMatrix g(2 * copies, 2 * copies);
  for (int i = 0; i < copies; ++i) {
    g(2 * i, 2 * i + 1) = 1;
    g(2 * i + 1, 2 * i) = 1;
  }
  return g;
}

namespace {

IntMatrix block_of(BlockKind kind) {
  switch (kind) {
    case BlockKind::plus_one: return IntMatrix::from_rows({{1}});
    case BlockKind::minus_one: return IntMatrix::from_rows({{-1}});
    case BlockKind::hyperbolic: return hyperbolic_gram(1);
    case BlockKind::neg_hyperbolic: return -hyperbolic_gram(1);
    case BlockKind::e8: return e8_cartan();
    case BlockKind::neg_e8: return -e8_cartan();
  }
  throw Error(ErrorCode::invalid_argument, "unknown block kind");
}

}  // namespace

GramForm block_sum(const std::vector<FormBlock>& blocks) {
  std::vector<IntMatrix> mats;
  for (const FormBlock& b : blocks) {
    if (b.count < 0) throw Error(ErrorCode::invalid_argument, "negative block count");
    for (int i = 0; i < b.count; ++i) mats.push_back(block_of(b.kind));
  }
  if (mats.empty()) throw Error(ErrorCode::invalid_argument, "form of rank 0");
  return GramForm(block_diagonal(mats));
}

GramForm make_standard(const StandardSpec& spec) {
  if (spec.ones < 0 || spec.minus_ones < 0 || spec.hyperbolic < 0)
    throw Error(ErrorCode::invalid_argument, "block counts m, n, p must be non-negative");
  if (spec.rank() == 0) throw Error(ErrorCode::invalid_argument, "form of rank 0");
  return block_sum({{BlockKind::plus_one, spec.ones},
                    {BlockKind::minus_one, spec.minus_ones},
                    {BlockKind::hyperbolic, spec.hyperbolic},
                    {spec.e8 >= 0 ? BlockKind::e8 : BlockKind::neg_e8, spec.e8 >= 0 ? spec.e8 : -spec.e8}});
}

GramForm direct_sum(const GramForm& a, const GramForm& b) {
  return GramForm(block_diagonal({a.gram(), b.gram()}));
}

GramForm parse_form(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::invalid_argument, "empty form description");

  std::vector<std::string> terms;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '<') ++depth;
    if (c == ')' || c == '>') --depth;
    if (c == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  terms.push_back(cur);

  std::vector<FormBlock> blocks;
  for (const std::string& t : terms) {
    std::size_t i = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    const int count = i ? std::stoi(t.substr(0, i)) : 1;
    std::string atom = t.substr(i);
    if (atom.size() > 2 && atom.front() == '(' && atom.back() == ')') atom = atom.substr(1, atom.size() - 2);
    BlockKind kind;
    if (atom == "<1>" || atom == "<+1>") kind = BlockKind::plus_one;
    else if (atom == "<-1>") kind = BlockKind::minus_one;
    else if (atom == "U" || atom == "H") kind = BlockKind::hyperbolic;
    else if (atom == "-U" || atom == "-H") kind = BlockKind::neg_hyperbolic;
    else if (atom == "E8" || atom == "E") kind = BlockKind::e8;
    else if (atom == "-E8" || atom == "-E") kind = BlockKind::neg_e8;
    else throw Error(ErrorCode::invalid_argument, "unrecognized form term '" + t + "'");
    blocks.push_back({kind, count});
  }
  return block_sum(blocks);
}

const std::vector<Vec>& e8_roots() {
  static const std::vector<Vec> roots = [] {
    const IntMatrix c = e8_cartan();
    using Small = std::vector<std::int64_t>;
    std::set<Small> seen;
    std::deque<Small> queue;
    for (std::size_t i = 0; i < 8; ++i) {
      Small v(8, 0);
      v[i] = 1;
      seen.insert(v);
      queue.push_back(v);
    }
    // Simply laced: the Weyl orbit of the simple roots is the whole root system.
    while (!queue.empty()) {
      Small v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < 8; ++i) {
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < 8; ++j) pairing += c(i, j).get_si() * v[j];
        if (pairing == 0) continue;
        Small w = v;
        w[i] -= pairing;
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::vector<Vec> out;
    for (const Small& v : seen) out.push_back(make_vec(v));
    return out;
  }();
  return roots;
}

FormInvariants invariants(const GramForm& form) { return form.invariants(); }

StandardSpec canonical_spec(const FormInvariants& inv) {
  if (!inv.indefinite())
    throw Error(ErrorCode::not_applicable, "classification by rank, signature and type applies to indefinite forms only");
  StandardSpec spec;
  if (inv.parity == Parity::odd) {
    spec.ones = inv.b_plus;
    spec.minus_ones = inv.b_minus;
    return spec;
  }
  if (inv.signature % 8 != 0)
    throw Error(ErrorCode::not_applicable,
                "even unimodular form needs signature = 0 mod 8, got " + std::to_string(inv.signature));
  spec.e8 = inv.signature / 8;
  spec.hyperbolic = (inv.rank - 8 * (spec.e8 < 0 ? -spec.e8 : spec.e8)) / 2;
  return spec;
}

GramForm canonical_representative(const FormInvariants& inv) { return make_standard(canonical_spec(inv)); }

Int norm(const GramForm& form, const Vec& v) { return form.norm(v); }

bool is_characteristic(const GramForm& form, const Vec& v) {
  const std::size_t n = form.dim();
  if (v.size() != n) throw Error(ErrorCode::dimension_mismatch, "vector length does not match form rank");
  const IntMatrix& g = form.gram();
  for (std::size_t i = 0; i < n; ++i) {
    Int pairing = 0;
    for (std::size_t j = 0; j < n; ++j) pairing += g(i, j) * v[j];
    if (mpz_odd_p(pairing.get_mpz_t()) != mpz_odd_p(g(i, i).get_mpz_t())) return false;
  }
  return true;
}

bool is_primitive(const Vec& v) {
  if (is_zero(v)) throw Error(ErrorCode::invalid_argument, "primitivity of the zero vector is undefined");
  return content(v) == 1;
}

Vec characteristic_vector(const GramForm& form) {
  const std::size_t n = form.dim();
  const IntMatrix& g = form.gram();
  // Augmented system over GF(2): G w = diag(G).
  std::vector<std::vector<int>> a(n, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpz_odd_p(g(i, j).get_mpz_t()) ? 1 : 0;
    a[i][n] = mpz_odd_p(g(i, i).get_mpz_t()) ? 1 : 0;
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && a[i][c])
        for (std::size_t j = 0; j <= n; ++j) a[i][j] ^= a[r][j];
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][n]) throw Error(ErrorCode::not_applicable, "no characteristic vector mod 2");
  Vec w(n, Int(0));
  for (std::size_t i = 0; i < r; ++i) w[pivots[i]] = a[i][n];
  return w;
}

bool is_full_isotropic_plane(const GramForm& form, const IntMatrix& rows) {
  if (rows.rows() != 2 || rows.cols() != form.dim()) return false;
  const Vec u = rows.row(0), v = rows.row(1);
  if (form.norm(u) != 0 || form.norm(v) != 0 || form.inner(u, v) != 0) return false;
  if (rank(rows) != 2) return false;
  const std::vector<Int> ed = elementary_divisors(rows);
  return ed.size() == 2 && ed[0] == 1 && ed[1] == 1;
}

}  // namespace unimod
