#include "unimod/exterior.hpp"

#include "unimod/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace unimod {

const std::array<WedgeBasis, 6>& basis_dictionary() {
  static const std::array<WedgeBasis, 6> basis{{
      {"x1", 1, 2},
      {"y1", 3, 4},
      {"x2", 1, 3},
      {"y2", 4, 2},
      {"x3", 1, 4},
      {"y3", 2, 3},
  }};
  return basis;
}

const GramForm& three_u() {
  static const GramForm form(hyperbolic_gram(3));
  return form;
}

IntMatrix exterior_square(const IntMatrix& a) {
  if (a.rows() != 4 || a.cols() != 4) throw Error(ErrorCode::dimension_mismatch, "exterior square expects a 4x4 matrix");
  const auto& basis = basis_dictionary();
  IntMatrix c(6, 6);
  for (std::size_t n = 0; n < 6; ++n) {
    const std::size_t k = basis[n].i - 1, l = basis[n].j - 1;
    for (std::size_t m = 0; m < 6; ++m) {
      const std::size_t i = basis[m].i - 1, j = basis[m].j - 1;
      c(n, m) = a(k, i) * a(l, j) - a(k, j) * a(l, i);
    }
  }
  return c;
}

Lambda2Report lambda2(const IntMatrix& a) {
  Lambda2Report report{a, exterior_square(a), false, std::nullopt};
  const IntMatrix& g = three_u().gram();
  report.gram_preserved = report.output.transpose() * g * report.output == g;
  if (report.gram_preserved) report.component = component_invariant(Isometry(three_u(), report.output));
  return report;
}

bool functoriality_check(const IntMatrix& a, const IntMatrix& b) {
  return exterior_square(a * b) == exterior_square(a) * exterior_square(b);
}

namespace {

const GeneratorSet& wall3() {
  static const GeneratorSet gens = wall_generators(3);
  return gens;
}

std::vector<std::string> tokenize(const std::string& word) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const char c = word[pos];
    const std::size_t len = (c == 'n' || c == 's') ? 2 : (c == 'p' || c == 'a') ? 3 : 0;
    if (len == 0 || pos + len > word.size())
      throw Error(ErrorCode::invalid_argument, "cannot parse generator word '" + word + "'");
    std::string tok = word.substr(pos, len);
    if (c == 'p' && tok[1] > tok[2]) std::swap(tok[1], tok[2]);
    out.push_back(tok);
    pos += len;
  }
  return out;
}

}  // namespace

IntMatrix wall_element(const std::string& word) {
  if (word.empty() || word == "I") return IntMatrix::identity(6);
  return wall3().evaluate(tokenize(word)).matrix();
}

const std::array<BasePreimage, 4>& base_preimages() {
  static const std::array<BasePreimage, 4> bases{{
      {"n1n2", IntMatrix::from_rows({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}})},
      {"s1s2", IntMatrix::from_rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}})},
      {"p12n1", IntMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}})},
      {"a12", IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}})},
  }};
  return bases;
}

std::vector<RelationVerdict> relation_suite() {
  std::vector<RelationVerdict> out;
  auto w = [](const std::string& s) { return wall_element(s); };
  auto inv = [](const IntMatrix& m) { return inverse(Isometry(three_u(), m)).matrix(); };
  auto check = [&](const std::string& family, const std::string& instance, const IntMatrix& lhs, const IntMatrix& rhs) {
    out.push_back({family, instance, lhs == rhs});
  };
  const IntMatrix id = IntMatrix::identity(6);
  auto s = [](int i) { return std::to_string(i); };
  auto p = [&](int i, int j) { return "p" + s(std::min(i, j)) + s(std::max(i, j)); };
  auto a = [&](int i, int j) { return "a" + s(i) + s(j); };

  for (int i = 1; i <= 3; ++i) {
    check("n_i^2=1", "n" + s(i) + "^2=1", w("n" + s(i) + "n" + s(i)), id);
    check("s_i^2=1", "s" + s(i) + "^2=1", w("s" + s(i) + "s" + s(i)), id);
    for (int t = 1; t <= 3; ++t) {
      const std::string n = "n" + s(i), st = "s" + s(t);
      check("n_is_t=s_tn_i", n + st + "=" + st + n, w(n + st), w(st + n));
    }
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const std::string ni = "n" + s(i), nj = "n" + s(j), si = "s" + s(i), sj = "s" + s(j);
      const std::string pij = p(i, j), aij = a(i, j);
      if (i < j) check("p_ij^2=1", pij + "^2=1", w(pij + pij), id);
      check("s_is_j=s_js_i", si + sj + "=" + sj + si, w(si + sj), w(sj + si));
      check("n_in_j=n_jn_i", ni + nj + "=" + nj + ni, w(ni + nj), w(nj + ni));
      check("n_ip_ij=p_ijn_j", ni + pij + "=" + pij + nj, w(ni + pij), w(pij + nj));
      check("s_ip_ij=p_ijs_j", si + pij + "=" + pij + sj, w(si + pij), w(pij + sj));
      check("n_ia_ij=a_ij^-1n_i", ni + aij + "=" + aij + "^-1" + ni, w(ni + aij), inv(w(aij)) * w(ni));
      check("n_ja_ij=a_ij^-1n_j", nj + aij + "=" + aij + "^-1" + nj, w(nj + aij), inv(w(aij)) * w(nj));
      check("p_ija_ijp_ij=a_ji", pij + aij + pij + "=" + a(j, i), w(pij + aij + pij), w(a(j, i)));
      for (int k = 1; k <= 3; ++k) {
        if (k == i || k == j) continue;
        const std::string nk = "n" + s(k), sk = "s" + s(k);
        check("p_ikp_ij=p_jkp_ik", p(i, k) + p(i, j) + "=" + p(j, k) + p(i, k), w(p(i, k) + p(i, j)),
              w(p(j, k) + p(i, k)));
        check("n_kp_ij=p_ijn_k", nk + pij + "=" + pij + nk, w(nk + pij), w(pij + nk));
        check("s_kp_ij=p_ijs_k", sk + pij + "=" + pij + sk, w(sk + pij), w(pij + sk));
        check("n_ka_ij=a_ijn_k", nk + aij + "=" + aij + nk, w(nk + aij), w(aij + nk));
        check("s_ka_ij=a_ijs_k", sk + aij + "=" + aij + sk, w(sk + aij), w(aij + sk));
        check("p_ika_ijp_ik=a_kj", p(i, k) + aij + p(i, k) + "=" + a(k, j), w(p(i, k) + aij + p(i, k)), w(a(k, j)));
      }
    }
  return out;
}

namespace {

// The 192 signed permutation matrices of determinant 1.
std::vector<IntMatrix> signed_permutations() {
  std::vector<IntMatrix> out;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    for (int signs = 0; signs < 16; ++signs) {
      IntMatrix m(4, 4);
      for (int c = 0; c < 4; ++c) m(perm[c], c) = (signs >> c) & 1 ? -1 : 1;
      if (determinant(m) == 1) out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<NGenerator> n_subgroup_generators() {
  std::vector<std::pair<std::string, std::string>> targets;  // label, word
  auto s = [](int i) { return std::to_string(i); };
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) targets.push_back({"n" + s(i) + "n" + s(j), "n" + s(i) + "n" + s(j)});
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) targets.push_back({"s" + s(i) + "s" + s(j), "s" + s(i) + "s" + s(j)});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) {
        const std::string pij = "p" + s(std::min(i, j)) + s(std::max(i, j));
        targets.push_back({"p" + s(i) + s(j) + "n" + s(i), pij + "n" + s(i)});
      }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) {
        const std::string aij = "a" + s(i) + s(j), si = "s" + s(i), sj = "s" + s(j);
        targets.push_back({aij, aij});
        targets.push_back({si + aij + si, si + aij + si});
        targets.push_back({sj + aij + sj, sj + aij + sj});
      }

  const std::vector<IntMatrix> perms = signed_permutations();
  std::vector<NGenerator> out;
  for (const auto& [label, word] : targets) {
    const IntMatrix element = wall_element(word);
    bool found = false;
    for (const auto& base : base_preimages()) {
      for (const IntMatrix& q : perms) {
        IntMatrix candidate = q * base.matrix * q.transpose();
        if (exterior_square(candidate) == element) {
          out.push_back({label, element, std::move(candidate), base.image});
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw Error(ErrorCode::verification_failed, "no signed-permutation conjugate maps to " + label);
  }
  return out;
}

IntMatrix random_sl4_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> index(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  IntMatrix acc = IntMatrix::identity(4);
  for (std::size_t step = 0; step < length; ++step) {
    const int i = index(rng);
    int j = index(rng);
    while (j == i) j = index(rng);
    IntMatrix e = IntMatrix::identity(4);
    e(i, j) = coin(rng) ? 1 : -1;
    acc = acc * e;
  }
  return acc;
}

IndexCertificate index_lower_bound_certificate(std::size_t samples, std::uint64_t seed, std::size_t word_length) {
  if (samples == 0) throw Error(ErrorCode::invalid_argument, "samples must be at least 1");
  IndexCertificate cert;
  cert.seed = seed;
  cert.samples = samples;
  cert.word_length = word_length;
  const ComponentInvariant trivial{1, 1};
  for (std::size_t k = 0; k < samples; ++k) {
    // One stream per sample so any sample can be replayed alone.
    std::mt19937_64 rng(seed + k);
    const Lambda2Report r = lambda2(random_sl4_word(rng, word_length));
    if (!r.gram_preserved || *r.component != trivial) ++cert.nontrivial_samples;
  }
  std::set<ComponentInvariant> values;
  for (const char* word : {"I", "n3", "s3", "n3s3"}) {
    const ComponentInvariant c = component_invariant(Isometry(three_u(), wall_element(word)));
    cert.coset_values.push_back({word, c});
    values.insert(c);
  }
  cert.values_distinct = values.size() == 4;
  cert.holds = cert.nontrivial_samples == 0 && cert.values_distinct;
  if (cert.nontrivial_samples != 0)
    throw Error(ErrorCode::verification_failed, "an SL(4,Z) image has nontrivial component invariant");
  return cert;
}

namespace {

using Poly = Polynomial;

int var_index(int i, int j) { return 4 * (i - 1) + (j - 1); }

Poly av(int i, int j) { return Poly::var(var_index(i, j)); }

Poly num(const Int& c) { return Poly::constant(Rat(c)); }

std::string pstr(const Poly& p) {
  return p.str([](int v) { return "a" + std::to_string(v / 4 + 1) + std::to_string(v % 4 + 1); });
}

int tau(int i) { return 5 - i; }  // (14)(23)

std::string idx(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s += std::to_string(x);
  return s;
}

// p_{kl,ij} as a quadratic in the a's.
Poly p_poly(int k, int l, int i, int j) {
  return av(k, i) * av(l, j) - av(k, j) * av(l, i);
}

// Known value of p_{kl,ij} for j != tau(i), shared by the three targets.
int p_cancel(int k, int l, int i, int j) { return (k == i && l == j) - (k == j && l == i); }

// p_{kl,ij} read off a 6x6 matrix through the dictionary; k != l, i != j.
Int p_from(const IntMatrix& c, int k, int l, int i, int j) {
  const auto& basis = basis_dictionary();
  auto locate = [&](int u, int v, int& sgn) -> std::size_t {
    for (std::size_t n = 0; n < 6; ++n) {
      if (basis[n].i == u && basis[n].j == v) {
        sgn = 1;
        return n;
      }
      if (basis[n].i == v && basis[n].j == u) {
        sgn = -1;
        return n;
      }
    }
    throw Error(ErrorCode::invalid_argument, "index pair outside the dictionary");
  };
  int s1 = 0, s2 = 0;
  const std::size_t row = locate(k, l, s1), col = locate(i, j, s2);
  return s1 * s2 * c(row, col);
}

}  // namespace

ReplayTrace non_realizability_replay(const std::string& target) {
  if (target != "n3" && target != "s3" && target != "n3s3")
    throw Error(ErrorCode::invalid_argument, "replay target must be n3, s3 or n3s3");
  ReplayTrace trace;
  trace.target = target;
  trace.target_matrix = wall_element(target);
  const IntMatrix& c = trace.target_matrix;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::verification_failed, "replay for " + target + " did not close: " + what);
  };

  // Step 1: on the columns x1, y1, x2, y2 the target agrees with the identity.
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j || j == tau(i) || i > j) continue;
      std::ostringstream os;
      for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l) {
          const Int got = p_from(c, k, l, i, j);
          if (got != p_cancel(k, l, i, j)) fail("p_{" + idx({k, l}) + "," + idx({i, j}) + "} differs from the identity");
          if (got != 0) os << "p_{" << k << l << "," << i << j << "}=" << got.get_str() << " ";
        }
      trace.steps.push_back({1, "cancel(" + idx({i, j}) + ")", "p_{kl," + idx({i, j}) + "} = d_ki d_lj - d_kj d_li",
                             "read from the target matrix", os.str() + "others 0"});
    }

  // Step 2: R_{i,l,j;i,j} with i outside {j, tau(j), l} reduces to a_lj = 0.
  std::map<int, Rat> known;
  for (int j = 1; j <= 4; ++j)
    for (int l = 1; l <= 4; ++l) {
      if (l == j || l == tau(j)) continue;
      int i = 1;
      while (i == j || i == tau(j) || i == l) ++i;
      const int k = i, s = j;
      // The relation is a consequence of the P's: it vanishes identically.
      const Poly generic = av(l, j) * p_poly(k, s, i, j) - av(s, j) * p_poly(k, l, i, j) +
                           av(k, j) * p_poly(s, l, i, j);
      if (!generic.is_zero()) fail("relation R is not an identity");
      const Poly reduced = av(l, j) * num(p_cancel(k, s, i, j)) -
                           av(s, j) * num(p_cancel(k, l, i, j)) +
                           av(k, j) * num(p_cancel(s, l, i, j));
      if (!(reduced == av(l, j))) fail("R_{" + idx({k, l, s}) + ";" + idx({i, j}) + "} reduced to " + pstr(reduced));
      known[var_index(l, j)] = 0;
      trace.steps.push_back({2, "R_{" + idx({k, l, s}) + ";" + idx({i, j}) + "}",
                             "a" + idx({l, j}) + "*p_{" + idx({k, s}) + "," + idx({i, j}) + "} - a" + idx({s, j}) +
                                 "*p_{" + idx({k, l}) + "," + idx({i, j}) + "} + a" + idx({k, j}) + "*p_{" +
                                 idx({s, l}) + "," + idx({i, j}) + "} = 0",
                             "cancel values for column " + idx({i, j}), pstr(reduced) + " = 0"});
    }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j && i != tau(j) && !known.count(var_index(i, j))) fail("a" + idx({i, j}) + " not forced to 0");

  // Step 3: P_{ij,ij} for j != tau(i) becomes a_ii a_jj = 1.
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      if (j == tau(i)) continue;
      const Poly reduced = (p_poly(i, j, i, j) - num(p_cancel(i, j, i, j))).substitute(known);
      const Poly expect = av(i, i) * av(j, j) - num(1);
      if (!(reduced == expect)) fail("P_{" + idx({i, j}) + "," + idx({i, j}) + "} reduced to " + pstr(reduced));
      trace.steps.push_back({3, "P_{" + idx({i, j}) + "," + idx({i, j}) + "}",
                             "p_{" + idx({i, j}) + "," + idx({i, j}) + "} = " + pstr(p_poly(i, j, i, j)),
                             "p = 1 and the zeros from step 2",
                             "a" + idx({i, i}) + "*a" + idx({j, j}) + " = 1, so a" + idx({i, i}) + " = a" +
                                 idx({j, j}) + " = +-1"});
    }

  // Steps 4 and 5 for each sign e = a_11.
  for (int e : {1, -1}) {
    std::map<int, Rat> branch = known;
    for (int i = 1; i <= 4; ++i) branch[var_index(i, i)] = e;
    for (int i = 1; i <= 4; ++i) {
      int l = 1;
      while (l == i || l == tau(i)) ++l;
      const int ti = tau(i);
      const Poly reduced = (p_poly(l, i, l, ti) - num(p_cancel(l, i, l, ti))).substitute(branch);
      const Poly expect = av(i, ti) * num(e);
      if (!(reduced == expect)) fail("P_{" + idx({l, i}) + "," + idx({l, ti}) + "} reduced to " + pstr(reduced));
      branch[var_index(i, ti)] = 0;
      trace.steps.push_back({4, "P_{" + idx({l, i}) + "," + idx({l, ti}) + "}",
                             "p_{" + idx({l, i}) + "," + idx({l, ti}) + "} = " + pstr(p_poly(l, i, l, ti)),
                             "p = 0, a_ii = " + std::to_string(e) + " and the zeros from step 2",
                             pstr(reduced) + " = 0, so a" + idx({i, ti}) + " = 0"});
    }
    IntMatrix a(4, 4);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        auto it = branch.find(var_index(i, j));
        if (it == branch.end()) fail("a" + idx({i, j}) + " left undetermined");
        a(i - 1, j - 1) = it->second.get_num();
      }
    if (a != IntMatrix::identity(4) && a != -IntMatrix::identity(4)) fail("A is not +-I");
    trace.forced_image = exterior_square(a);
    if (trace.forced_image != IntMatrix::identity(6)) fail("Lambda^2(+-I) is not the identity");
    if (trace.forced_image == c) fail("target equals the identity");
    trace.steps.push_back({5, "conclusion", "A = " + std::string(e > 0 ? "I" : "-I"), "steps 2-4",
                           "Lambda^2 A = I, which differs from " + target + " on x3, y3"});
  }
  trace.closed = true;
  return trace;
}

}  // namespace unimod
