#include "unimod/orbit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace unimod {

bool VecLess::operator()(const Vec& a, const Vec& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

Int max_abs(const Vec& v) {
  Int m = 0;
  for (const Int& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

Int sum_squares(const Vec& v) {
  Int s = 0;
  for (const Int& x : v) s += x * x;
  return s;
}

// R_gamma(x) without building the matrix; caller guarantees integrality.
Vec reflect(const GramForm& form, const Vec& gamma, const Vec& x) {
  const Int q = form.norm(gamma);
  const Int twice = 2 * form.inner(x, gamma);
  Int coeff;
  mpz_divexact(coeff.get_mpz_t(), twice.get_mpz_t(), q.get_mpz_t());
  Vec out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= coeff * gamma[i];
  return out;
}

void require_start(const GramForm& form, const Vec& start) {
  if (start.size() != form.dim()) throw Error(ErrorCode::dimension_mismatch, "start vector length does not match form rank");
  if (is_zero(start)) throw Error(ErrorCode::invalid_argument, "start vector must be nonzero");
}

}  // namespace

std::string to_string(EscapeKind kind) {
  switch (kind) {
    case EscapeKind::odd: return "odd";
    case EscapeKind::even: return "even";
    case EscapeKind::generic: return "generic";
  }
  return "unknown";
}

OrbitResult orbit_bfs(const GeneratorSet& gens, const Vec& start, const Int& coeff_bound) {
  if (start.size() != gens.form().dim()) throw Error(ErrorCode::dimension_mismatch, "start vector length does not match form rank");
  if (is_zero(start)) throw Error(ErrorCode::invalid_argument, "orbit start must be nonzero");
  if (max_abs(start) > coeff_bound) throw Error(ErrorCode::invalid_argument, "coefficient bound is smaller than the start vector");
  OrbitResult out;
  std::set<Vec, VecLess> seen{start};
  std::deque<Vec> queue{start};
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens.generators()) {
      Vec w = g.isometry.apply(v);
      if (max_abs(w) > coeff_bound) {
        out.truncated = true;
        continue;
      }
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  out.vectors.assign(seen.begin(), seen.end());
  return out;
}

std::optional<std::size_t> odd_escape_pivot(const GramForm& form) {
  const IntMatrix& g = form.gram();
  const std::size_t n = form.dim();
  if (n < 3) return std::nullopt;
  std::size_t plus = 0, minus = 0, last_plus = 0, last_minus = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g(i, j) != 0) return std::nullopt;
      if (i == j) {
        if (g(i, i) == 1) {
          ++plus;
          last_plus = i;
        } else if (g(i, i) == -1) {
          ++minus;
          last_minus = i;
        } else {
          return std::nullopt;
        }
      }
    }
  if (minus == 1) return last_minus;
  if (plus == 1) return last_plus;
  return std::nullopt;
}

std::optional<std::size_t> even_escape_pivot(const GramForm& form) {
  const IntMatrix& g = form.gram();
  const std::size_t n = form.dim();
  if (n < 10 || (n - 2) % 8 != 0) return std::nullopt;
  const IntMatrix e8 = e8_cartan();
  // Try each block layout with the hyperbolic pair at an offset multiple of 8.
  for (std::size_t u = 0; u < n; u += 8) {
    const Int xy = g(u, u + 1);
    if (g(u, u) != 0 || g(u + 1, u + 1) != 0 || (xy != 1 && xy != -1)) continue;
    std::vector<std::size_t> e8_index;
    for (std::size_t i = 0; i < n; ++i)
      if (i != u && i != u + 1) e8_index.push_back(i);
    int block_sign = 0;
    bool ok = true;
    for (std::size_t a = 0; a < e8_index.size() && ok; ++a)
      for (std::size_t b = 0; b < e8_index.size() && ok; ++b) {
        const std::size_t ia = e8_index[a], ib = e8_index[b];
        const bool same_block = a / 8 == b / 8;
        const Int expect = same_block ? Int(e8(a % 8, b % 8)) : Int(0);
        const Int got = g(ia, ib);
        if (!same_block) {
          ok = got == 0;
          continue;
        }
        if (expect == 0) {
          ok = got == 0;
          continue;
        }
        int s = got == expect ? 1 : (got == -expect ? -1 : 0);
        if (s == 0 || (block_sign != 0 && s != block_sign)) ok = false;
        block_sign = s;
      }
    for (std::size_t i : e8_index)
      if (g(u, i) != 0 || g(u + 1, i) != 0) ok = false;
    if (ok) return u;
  }
  return std::nullopt;
}

EscapeTrace escape_odd(const GramForm& form, const Vec& start, std::size_t steps) {
  const auto pivot = odd_escape_pivot(form);
  if (!pivot)
    throw Error(ErrorCode::not_applicable, "odd escape needs a diagonal form n<1>+<-1> (or its negative) with n >= 2");
  require_start(form, start);
  const std::size_t f = *pivot;
  const std::size_t n = form.dim();

  EscapeTrace trace{form, start, {}, f, EscapeKind::odd, 0};
  Vec x = start;
  for (std::size_t step = 0; step < steps; ++step) {
    // Two largest |a_i| among the H coordinates; ties go to the lower index.
    std::size_t i1 = n, i2 = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == f) continue;
      if (i1 == n || abs(x[i]) > abs(x[i1])) {
        i2 = i1;
        i1 = i;
      } else if (i2 == n || abs(x[i]) > abs(x[i2])) {
        i2 = i;
      }
    }
    const int sb = sign(x[f]);
    auto epsilon = [&](const Int& a) {
      const int sa = sign(a);
      if (sa == 0) return 1;
      return sb == 0 ? -sa : -sa * sb;
    };
    Vec gamma(n, Int(0));
    gamma[i1] = epsilon(x[i1]);
    gamma[i2] = epsilon(x[i2]);
    gamma[f] = 1;
    x = reflect(form, gamma, x);
    trace.steps.push_back({std::move(gamma), x, 0});
  }
  return trace;
}

namespace {

struct EvenLayout {
  std::size_t x = 0;  // index of x; y is x + 1
  std::vector<std::vector<std::size_t>> blocks;
  GramForm work;      // the form with E8 blocks positive definite
};

EvenLayout even_layout(const GramForm& form) {
  const auto pivot = even_escape_pivot(form);
  if (!pivot) throw Error(ErrorCode::not_applicable, "even escape needs a form U + lE8 (l >= 1) in block layout");
  EvenLayout lay{*pivot, {}, form};
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < form.dim(); ++i)
    if (i != lay.x && i != lay.x + 1) rest.push_back(i);
  for (std::size_t b = 0; b < rest.size(); b += 8)
    lay.blocks.emplace_back(rest.begin() + static_cast<long>(b), rest.begin() + static_cast<long>(b + 8));
  if (form.gram()(lay.blocks[0][0], lay.blocks[0][0]) < 0) lay.work = form.negated();
  return lay;
}

}  // namespace

EscapeTrace escape_even(const GramForm& form, const Vec& start, std::size_t steps) {
  const EvenLayout lay = even_layout(form);
  require_start(form, start);
  const GramForm& w = lay.work;
  const std::size_t n = form.dim();
  const std::size_t ix = lay.x, iy = lay.x + 1;
  const Int xy = w.gram()(ix, iy);
  const auto& roots = e8_roots();

  auto eta_zero = [&](const Vec& v) {
    for (const auto& blk : lay.blocks)
      for (std::size_t i : blk)
        if (v[i] != 0) return false;
    return true;
  };
  auto embed_root = [&](std::size_t block, const Vec& r) {
    Vec out(n, Int(0));
    for (std::size_t k = 0; k < 8; ++k) out[lay.blocks[block][k]] = r[k];
    return out;
  };
  // First root (blocks in order, roots sorted) pairing nontrivially with eta.
  auto pick_root = [&](const Vec& v) -> Vec {
    for (std::size_t b = 0; b < lay.blocks.size(); ++b)
      for (const Vec& r : roots) {
        Vec omega = embed_root(b, r);
        if (w.inner(omega, v) != 0) return omega;
      }
    return embed_root(0, roots.front());
  };

  // Tracked coordinate: x while b != 0 (or once case 2 creates b), else y.
  const bool track_x = start[iy] != 0 || start[ix] == 0;
  const std::size_t it = track_x ? ix : iy;
  const std::size_t ip = track_x ? iy : ix;

  EscapeTrace trace{form, start, {}, it, EscapeKind::even, 0};
  Vec v = start;
  for (std::size_t step = 0; step < steps; ++step) {
    const bool ez = eta_zero(v);
    const bool uz = v[ix] == 0 && v[iy] == 0;
    Vec gamma;
    int label;
    if (uz) {
      // Case 2: R_{omega + y} with omega . eta != 0 creates a y-coefficient.
      label = 2;
      gamma = pick_root(v);
      gamma[iy] += 1;
    } else {
      label = ez ? 3 : 1;
      const Int p = v[ip];
      const int want = -sign(Int(xy * p));  // direction of the tracked coefficient
      trace.direction = want;
      const Vec omega = pick_root(v);
      const Int we = w.inner(omega, v);
      bool found = false;
      for (long mag = 1; mag <= 4096 && !found; ++mag)
        for (long sgn : {1L, -1L}) {
          const Int k = mag * sgn;
          const Int c = we + k * xy * p;
          const Int delta = -c * k;
          if (sign(delta) != want) continue;
          bool eta_survives = false;
          for (const auto& blk : lay.blocks)
            for (std::size_t i : blk)
              if (v[i] - c * omega[i] != 0) eta_survives = true;
          if (!eta_survives) continue;
          gamma = omega;
          gamma[it] += k;
          found = true;
          break;
        }
      if (!found) throw Error(ErrorCode::budget_exhausted, "no admissible k for the even escape step");
    }
    v = reflect(w, gamma, v);
    trace.steps.push_back({gamma, v, label});
  }
  if (trace.direction == 0 && !trace.steps.empty()) trace.direction = -sign(Int(xy * trace.steps.back().vector[ip]));
  return trace;
}

EscapeTrace escape_generic(const GramForm& form, const Vec& start, std::size_t steps) {
  require_start(form, start);
  const std::size_t n = form.dim();
  const IntMatrix& g = form.gram();

  // Reflections in vectors with up to three entries +-1 that are integral.
  std::vector<Vec> candidates;
  auto consider = [&](const Vec& gamma) {
    const Int q = form.norm(gamma);
    if (q == 0) return;
    for (std::size_t k = 0; k < n; ++k) {
      Int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += g(k, j) * gamma[j];
      Int twice = 2 * pairing;
      if (!mpz_divisible_p(twice.get_mpz_t(), q.get_mpz_t())) return;
    }
    candidates.push_back(gamma);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (int si : {1, -1}) {
      Vec a(n, Int(0));
      a[i] = si;
      consider(a);
      for (std::size_t j = i + 1; j < n; ++j)
        for (int sj : {1, -1}) {
          Vec b = a;
          b[j] = sj;
          consider(b);
          for (std::size_t k = j + 1; k < n; ++k)
            for (int sk : {1, -1}) {
              Vec c = b;
              c[k] = sk;
              consider(c);
            }
        }
    }

  EscapeTrace trace{form, start, {}, 0, EscapeKind::generic, 0};
  Vec x = start;
  for (std::size_t step = 0; step < steps; ++step) {
    const Int current = sum_squares(x);
    const Vec* best = nullptr;
    Vec best_image;
    Int best_size = current;
    for (const Vec& gamma : candidates) {
      Vec image = reflect(form, gamma, x);
      Int size = sum_squares(image);
      if (size > best_size) {
        best_size = size;
        best_image = std::move(image);
        best = &gamma;
      }
    }
    if (!best)
      throw Error(ErrorCode::budget_exhausted,
                  "generic escape found no growing reflection after " + std::to_string(step) + " steps");
    x = best_image;
    trace.steps.push_back({*best, x, 0});
  }
  std::size_t arg = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (abs(x[i]) > abs(x[arg])) arg = i;
  trace.tracked_index = arg;
  return trace;
}

EscapeTrace escape(const GramForm& form, const Vec& start, std::size_t steps) {
  if (odd_escape_pivot(form)) return escape_odd(form, start, steps);
  if (even_escape_pivot(form)) return escape_even(form, start, steps);
  return escape_generic(form, start, steps);
}

std::string check_escape_trace(const EscapeTrace& t) {
  const GramForm& form = t.form;
  const Int q0 = form.norm(t.start);
  const bool char0 = is_characteristic(form, t.start);
  const Int content0 = content(t.start);
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const Vec& prev = t.vector_at(k);
    const Vec& cur = t.steps[k].vector;
    const std::string at = "step " + std::to_string(k + 1) + ": ";
    try {
      const Isometry r = reflection(form, t.steps[k].gamma);
      if (r.apply(prev) != cur) return at + "vector is not the reflection of its predecessor";
    } catch (const Error& e) {
      return at + e.what();
    }
    if (form.norm(cur) != q0) return at + "norm changed";
    if (is_characteristic(form, cur) != char0) return at + "characteristic status changed";
    if (content(cur) != content0) return at + "content changed";
    switch (t.kind) {
      case EscapeKind::odd:
        if (abs(cur[t.tracked_index]) <= abs(prev[t.tracked_index])) return at + "tracked coefficient did not grow";
        break;
      case EscapeKind::even: {
        const int label = t.steps[k].case_label;
        const Int delta = cur[t.tracked_index] - prev[t.tracked_index];
        if (label == 2) {
          if (delta != 0) return at + "case 2 step moved the tracked coefficient";
        } else if (sign(delta) != t.direction) {
          return at + "tracked coefficient is not monotone";
        }
        if (label != 1 && k + 1 < t.steps.size() && t.steps[k + 1].case_label != 1)
          return at + "transition step did not land in case 1";
        break;
      }
      case EscapeKind::generic:
        if (sum_squares(cur) <= sum_squares(prev)) return at + "vector did not grow";
        break;
    }
  }
  return {};
}

std::vector<Vec> characteristic_family(const GramForm& form, const Int& k, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::invalid_argument, "count must be at least 1");
  const std::size_t n = form.dim();
  if (n < 4) throw Error(ErrorCode::not_applicable, "characteristic family needs a rank-4 leading block");
  const IntMatrix& g = form.gram();
  IntMatrix lead(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) lead(i, j) = g(i, j);
  const IntMatrix odd_lead = IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  const bool even_block = lead == hyperbolic_gram(2);
  if (!even_block && lead != odd_lead)
    throw Error(ErrorCode::not_applicable, "leading block must be 2U or 2<1>+2<-1>");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 4; j < n; ++j)
      if (g(i, j) != 0) throw Error(ErrorCode::not_applicable, "leading block is not an orthogonal summand");

  // Tail L: pad with a characteristic vector w of L, shifting k so the total
  // norm is sigma + 8k. Norm(w) = sigma(L) mod 8 makes the shift integral.
  Vec pad;
  Int kk = k;
  if (n > 4) {
    IntMatrix tail(n - 4, n - 4);
    for (std::size_t i = 4; i < n; ++i)
      for (std::size_t j = 4; j < n; ++j) tail(i - 4, j - 4) = g(i, j);
    const GramForm tail_form(tail);
    if (!tail_form.is_unimodular()) throw Error(ErrorCode::not_applicable, "trailing summand is not unimodular");
    pad = characteristic_vector(tail_form);
    const Int diff = Int(tail_form.invariants().signature) - tail_form.norm(pad);
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), 8))
      throw Error(ErrorCode::verification_failed, "characteristic norm is not congruent to the signature mod 8");
    kk += diff / 8;
  }

  std::vector<Vec> out;
  for (std::size_t idx = 1; idx <= count; ++idx) {
    Vec v(4);
    const Int a = static_cast<long>(idx);
    if (even_block) {
      // 2a x0 + 2k y0 + 2(1-a) x1 + 2k y1: a k + (1 - a) k = k.
      v = {2 * a, 2 * kk, 2 * (1 - a), 2 * kk};
    } else if (kk == 0) {
      // (a, 1, a, 1) with a odd has norm 0.
      const Int odd = 2 * a - 1;
      v = {odd, Int(1), odd, Int(1)};
    } else {
      // k = 2^t r with r odd; a = 2^{t+1} + r, c = 2^{t+1} - r give a^2 - c^2 = 8k.
      const mp_bitcnt_t t = mpz_scan1(kk.get_mpz_t(), 0);
      Int r;
      mpz_tdiv_q_2exp(r.get_mpz_t(), kk.get_mpz_t(), t);
      Int two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, t + 1);
      const Int b = 2 * a - 1;
      v = {two_pow + r, b, two_pow - r, b};
    }
    v.insert(v.end(), pad.begin(), pad.end());
    out.push_back(std::move(v));
  }
  return out;
}

IsotropicPlane::IsotropicPlane(const GramForm& form, IntMatrix rows) : rows_(std::move(rows)) {
  if (!is_full_isotropic_plane(form, rows_))
    throw Error(ErrorCode::invalid_argument, "rows do not span a full isotropic plane");
  normal_form_ = row_hermite_form(rows_);
}

IsotropicPlane IsotropicPlane::transformed(const Isometry& g) const {
  IntMatrix image(2, rows_.cols());
  image.set_row(0, g.apply(rows_.row(0)));
  image.set_row(1, g.apply(rows_.row(1)));
  IntMatrix nf = row_hermite_form(image);
  return IsotropicPlane(std::move(image), std::move(nf));
}

std::vector<IsotropicPlane> enumerate_isotropic_planes(const GramForm& form, long bound) {
  if (bound < 1) throw Error(ErrorCode::invalid_argument, "bound must be at least 1");
  if (!form.invariants().indefinite()) throw Error(ErrorCode::not_applicable, "definite forms have no isotropic vectors");
  const std::size_t n = form.dim();
  std::vector<std::vector<long>> gram(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = form.gram()(i, j).get_si();
  auto dot = [&](const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += a[i] * gram[i][j] * b[j];
    return s;
  };

  // Primitive isotropic vectors in the box.
  std::vector<std::vector<long>> iso;
  std::vector<long> v(n, -bound);
  for (;;) {
    long g = 0;
    for (long c : v) g = std::gcd(g, c);
    if (g == 1 && dot(v, v) == 0) iso.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) break;
    ++v[i];
  }

  std::set<IntMatrix> keys;
  std::vector<IsotropicPlane> out;
  for (std::size_t i = 0; i < iso.size(); ++i)
    for (std::size_t j = i + 1; j < iso.size(); ++j) {
      if (dot(iso[i], iso[j]) != 0) continue;
      // Saturated rank 2 iff the 2x2 minors are coprime.
      long g = 0;
      for (std::size_t a = 0; a < n && g != 1; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g = std::gcd(g, iso[i][a] * iso[j][b] - iso[i][b] * iso[j][a]);
      if (g != 1) continue;
      IntMatrix rows(2, n);
      for (std::size_t c = 0; c < n; ++c) {
        rows(0, c) = iso[i][c];
        rows(1, c) = iso[j][c];
      }
      IntMatrix key = row_hermite_form(rows);
      if (!keys.insert(key).second) continue;
      out.emplace_back(form, key);
    }
  std::sort(out.begin(), out.end());
  return out;
}

IsotropicPlane plane_family_2U(const Int& a, const Int& b, int variant) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw Error(ErrorCode::invalid_argument, "plane family needs gcd(a, b) = 1");
  static const GramForm two_u(hyperbolic_gram(2));
  IntMatrix rows(2, 4);
  if (variant == 1) {
    rows.set_row(0, {a, Int(0), b, Int(0)});
    rows.set_row(1, {Int(0), b, Int(0), Int(-a)});
  } else if (variant == 2) {
    rows.set_row(0, {a, Int(0), Int(0), b});
    rows.set_row(1, {Int(0), b, Int(-a), Int(0)});
  } else {
    throw Error(ErrorCode::invalid_argument, "plane family variant must be 1 or 2");
  }
  return IsotropicPlane(two_u, std::move(rows));
}

PlaneOrbit plane_orbit_bfs(const GeneratorSet& gens, const IsotropicPlane& start, std::size_t max_planes,
                           std::size_t max_depth) {
  PlaneOrbit out;
  std::set<IntMatrix> seen;
  auto record = [&](const IsotropicPlane& p, std::vector<std::string> word, Isometry g) {
    seen.insert(p.normal_form());
    out.planes.push_back(p);
    out.words.push_back(std::move(word));
    out.witnesses.push_back(std::move(g));
  };
  record(start, {}, Isometry::identity(gens.form()));
  std::size_t level_begin = 0;
  for (std::size_t depth = 0; depth < max_depth && out.planes.size() < max_planes; ++depth) {
    const std::size_t level_end = out.planes.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end && out.planes.size() < max_planes; ++i)
      for (const auto& gen : gens.generators()) {
        IsotropicPlane image = out.planes[i].transformed(gen.isometry);
        if (seen.count(image.normal_form())) continue;
        std::vector<std::string> word = out.words[i];
        word.insert(word.begin(), gen.label);
        Isometry witness = compose(gen.isometry, out.witnesses[i]);
        record(image, std::move(word), std::move(witness));
        if (out.planes.size() >= max_planes) break;
      }
    level_begin = level_end;
  }
  return out;
}

TransitivityReport transitivity_probe(const GeneratorSet& gens, const Int& norm_value, bool characteristic,
                                      long coeff_bound) {
  const GramForm& form = gens.form();
  if (form.invariants().definiteness != Definiteness::strongly_indefinite)
    throw Error(ErrorCode::not_applicable, "transitivity probe expects a strongly indefinite form");
  if (coeff_bound < 1) throw Error(ErrorCode::invalid_argument, "bound must be at least 1");
  const std::size_t n = form.dim();
  TransitivityReport report;
  Vec v(n, Int(-coeff_bound));
  for (;;) {
    if (!is_zero(v) && content(v) == 1 && form.norm(v) == norm_value && is_characteristic(form, v) == characteristic)
      report.candidates.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == coeff_bound) v[i++] = -coeff_bound;
    if (i == n) break;
    v[i] += 1;
  }
  std::sort(report.candidates.begin(), report.candidates.end(), VecLess{});
  if (report.candidates.empty()) return report;
  const OrbitResult orbit = orbit_bfs(gens, report.candidates.front(), Int(coeff_bound));
  report.truncated = orbit.truncated;
  const std::set<Vec, VecLess> reach(orbit.vectors.begin(), orbit.vectors.end());
  for (const Vec& c : report.candidates) (reach.count(c) ? report.reached : report.unreached).push_back(c);
  return report;
}

namespace {

std::vector<Vec> image_set(const IntMatrix& m, const std::vector<Vec>& s) {
  std::vector<Vec> out;
  out.reserve(s.size());
  for (const Vec& v : s) out.push_back(m * v);
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

}  // namespace

CosetCertificate coset_certificate(const GramForm& form, const std::vector<Vec>& invariant_set, std::size_t n,
                                   std::size_t step_budget) {
  if (invariant_set.empty()) throw Error(ErrorCode::invalid_argument, "invariant set must be nonempty");
  for (const Vec& v : invariant_set) {
    if (v.size() != form.dim()) throw Error(ErrorCode::dimension_mismatch, "invariant vector length does not match form rank");
    if (is_zero(v)) throw Error(ErrorCode::invalid_argument, "invariant set must not contain the zero vector");
  }
  const FormInvariants& inv = form.invariants();
  if (!inv.indefinite() || inv.rank < 3)
    throw Error(ErrorCode::not_applicable, "coset certificates need an indefinite form of rank >= 3");
  if (n == 0) throw Error(ErrorCode::invalid_argument, "certificate size must be at least 1");

  std::vector<Vec> sorted_set = invariant_set;
  std::sort(sorted_set.begin(), sorted_set.end(), VecLess{});
  sorted_set.erase(std::unique(sorted_set.begin(), sorted_set.end()), sorted_set.end());

  CosetCertificate cert{form, sorted_set, {}, {}, std::nullopt};
  cert.witnesses.push_back(Isometry::identity(form));
  cert.images.push_back(sorted_set);
  if (n == 1) return cert;

  std::set<std::vector<Vec>> seen{sorted_set};
  std::size_t steps = std::max<std::size_t>(n, 8);
  for (;;) {
    EscapeTrace trace = escape(form, sorted_set.front(), steps);
    Isometry g = Isometry::identity(form);
    cert.witnesses.erase(cert.witnesses.begin() + 1, cert.witnesses.end());
    cert.images.erase(cert.images.begin() + 1, cert.images.end());
    seen = {sorted_set};
    for (const EscapeStep& step : trace.steps) {
      g = compose(reflection(form, step.gamma), g);
      std::vector<Vec> img = image_set(g.matrix(), sorted_set);
      if (!seen.insert(img).second) continue;
      cert.witnesses.push_back(g);
      cert.images.push_back(std::move(img));
      if (cert.witnesses.size() == n) {
        cert.trace = std::move(trace);
        return cert;
      }
    }
    if (steps >= step_budget)
      throw Error(ErrorCode::budget_exhausted, "only " + std::to_string(cert.witnesses.size()) +
                                                   " distinct image sets within the step budget");
    steps = std::min(step_budget, 2 * steps);
  }
}

std::string check_coset_certificate(const CosetCertificate& cert) {
  if (cert.witnesses.size() != cert.images.size()) return "witness and image counts differ";
  std::set<std::vector<Vec>> seen;
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    const std::string at = "witness " + std::to_string(i) + ": ";
    try {
      Isometry replay(cert.form, cert.witnesses[i].matrix());
      if (image_set(replay.matrix(), cert.invariant_set) != cert.images[i]) return at + "image set does not match";
    } catch (const Error& e) {
      return at + e.what();
    }
    if (!seen.insert(cert.images[i]).second) return at + "image set repeats an earlier one";
  }
  return {};
}

}  // namespace unimod
