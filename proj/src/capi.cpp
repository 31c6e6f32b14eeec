#include "unimod/unimod.h"

#include <cstdlib>
#include <cstring>
#include <numeric>
#include <set>
#include <string>

#include "unimod/verify.hpp"

using namespace unimod;

struct um_form {
  GramForm form;
};

struct um_isometry {
  Isometry iso;
};

namespace {

thread_local std::string last_error;

um_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return UM_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return UM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::degenerate_form: return UM_ERR_DEGENERATE_FORM;
    case ErrorCode::not_applicable: return UM_ERR_NOT_APPLICABLE;
    case ErrorCode::form_mismatch: return UM_ERR_FORM_MISMATCH;
    case ErrorCode::not_integral: return UM_ERR_NOT_INTEGRAL;
    case ErrorCode::inconsistent_input: return UM_ERR_INCONSISTENT_INPUT;
    case ErrorCode::budget_exhausted: return UM_ERR_BUDGET_EXHAUSTED;
    case ErrorCode::verification_failed: return UM_ERR_VERIFICATION_FAILED;
  }
  return UM_ERR_INTERNAL;
}

template <class F>
um_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return UM_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = e.what();
    return UM_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return UM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  if (!out) throw Error(ErrorCode::invalid_argument, "null output pointer");
  *out = dup_string(j.dump());
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) throw Error(ErrorCode::invalid_argument, std::string("null ") + what);
}

IntMatrix square_from(const int64_t* entries, size_t dim) {
  require(entries, "matrix entries");
  if (dim == 0) throw Error(ErrorCode::invalid_argument, "dimension must be positive");
  IntMatrix m(dim, dim);
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) m(r, c) = static_cast<long>(entries[r * dim + c]);
  return m;
}

Vec vec_from(const int64_t* entries, size_t dim) {
  require(entries, "vector entries");
  Vec v(dim);
  for (size_t i = 0; i < dim; ++i) v[i] = static_cast<long>(entries[i]);
  return v;
}

json parse_json(const char* text, const char* what) {
  require(text, what);
  return json::parse(text);
}

}  // namespace

extern "C" {

const char* um_version(void) { return tool_version(); }

const char* um_status_name(um_status status) {
  switch (status) {
    case UM_OK: return "ok";
    case UM_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case UM_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case UM_ERR_DEGENERATE_FORM: return "degenerate_form";
    case UM_ERR_NOT_APPLICABLE: return "not_applicable";
    case UM_ERR_FORM_MISMATCH: return "form_mismatch";
    case UM_ERR_NOT_INTEGRAL: return "not_integral";
    case UM_ERR_INCONSISTENT_INPUT: return "inconsistent_input";
    case UM_ERR_BUDGET_EXHAUSTED: return "budget_exhausted";
    case UM_ERR_VERIFICATION_FAILED: return "verification_failed";
    case UM_ERR_PARSE: return "parse_error";
    case UM_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* um_last_error(void) { return last_error.c_str(); }

void um_string_free(char* s) { std::free(s); }

um_status um_form_parse(const char* text, um_form** out) {
  return guard([&] {
    require(text, "form text");
    require(out, "output pointer");
    *out = new um_form{form_from_text(text)};
  });
}

um_status um_form_from_gram(const int64_t* entries, size_t dim, um_form** out) {
  return guard([&] {
    require(out, "output pointer");
    *out = new um_form{GramForm(square_from(entries, dim))};
  });
}

void um_form_free(um_form* form) { delete form; }

size_t um_form_dim(const um_form* form) { return form ? form->form.dim() : 0; }

um_status um_form_to_json(const um_form* form, char** out) {
  return guard([&] {
    require(form, "form");
    emit(to_json(form->form), out);
  });
}

um_status um_classify(const um_form* form, char** out) {
  return guard([&] {
    require(form, "form");
    if (form->form.determinant() == 0) throw Error(ErrorCode::degenerate_form, "Gram matrix is singular");
    if (!form->form.is_unimodular())
      throw Error(ErrorCode::not_applicable,
                  "classification needs a unimodular form, determinant is " + form->form.determinant().get_str());
    const FormInvariants& inv = form->form.invariants();
    json j = {{"form", to_json(form->form)}, {"invariants", to_json(inv)}};
    if (inv.indefinite()) {
      j["canonical"] = to_json(canonical_spec(inv));
      j["canonical_gram"] = to_json(canonical_representative(inv).gram());
    } else {
      j["note"] = "classification not applicable: definite forms are not determined by rank, signature and type";
    }
    emit(j, out);
  });
}

um_status um_isometry_create(const um_form* form, const int64_t* entries, size_t dim, um_isometry** out) {
  return guard([&] {
    require(form, "form");
    require(out, "output pointer");
    *out = new um_isometry{Isometry(form->form, square_from(entries, dim))};
  });
}

um_status um_isometry_reflection(const um_form* form, const int64_t* gamma, size_t dim, um_isometry** out) {
  return guard([&] {
    require(form, "form");
    require(out, "output pointer");
    *out = new um_isometry{reflection(form->form, vec_from(gamma, dim))};
  });
}

um_status um_isometry_compose(const um_isometry* g, const um_isometry* h, um_isometry** out) {
  return guard([&] {
    require(g, "isometry");
    require(h, "isometry");
    require(out, "output pointer");
    *out = new um_isometry{compose(g->iso, h->iso)};
  });
}

void um_isometry_free(um_isometry* g) { delete g; }

um_status um_isometry_to_json(const um_isometry* g, char** out) {
  return guard([&] {
    require(g, "isometry");
    emit({{"form", to_json(g->iso.form())}, {"matrix", to_json(g->iso.matrix())}}, out);
  });
}

um_status um_isometry_component(const um_isometry* g, int* eps_det, int* eps_plus) {
  return guard([&] {
    require(g, "isometry");
    require(eps_det, "output pointer");
    require(eps_plus, "output pointer");
    const ComponentInvariant c = component_invariant(g->iso);
    *eps_det = c.eps_det;
    *eps_plus = c.eps_plus;
  });
}

um_status um_isometry_spinor_norm(const um_isometry* g, int* out) {
  return guard([&] {
    require(g, "isometry");
    require(out, "output pointer");
    *out = spinor_norm(g->iso);
  });
}

um_status um_escape(const um_form* form, const char* start_json, size_t steps, char** out) {
  return guard([&] {
    require(form, "form");
    const EscapeTrace trace = escape(form->form, vec_from_json(parse_json(start_json, "start vector")), steps);
    json j = to_json(trace);
    j["check"] = check_escape_trace(trace).empty() ? "ok" : check_escape_trace(trace);
    emit(j, out);
  });
}

um_status um_char_family(const um_form* form, int64_t k, size_t count, char** out) {
  return guard([&] {
    require(form, "form");
    const auto family = characteristic_family(form->form, Int(static_cast<long>(k)), count);
    json vectors = json::array();
    for (const Vec& v : family) vectors.push_back({{"vector", to_json(v)}, {"norm", to_json(form->form.norm(v))}});
    emit({{"form", to_json(form->form)},
          {"k", k},
          {"target_norm", form->form.invariants().signature + 8 * k},
          {"vectors", vectors}},
         out);
  });
}

um_status um_planes(const um_form* form, long bound, char** out) {
  return guard([&] {
    require(form, "form");
    const auto planes = enumerate_isotropic_planes(form->form, bound);
    json list = json::array();
    for (const auto& p : planes) list.push_back(to_json(p));
    json j = {{"form", to_json(form->form)}, {"bound", bound}, {"count", planes.size()}, {"planes", list}};
    if (form->form.gram() == hyperbolic_gram(2)) {
      std::set<IntMatrix> found, family;
      for (const auto& p : planes) found.insert(p.normal_form());
      for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
          if (std::gcd(a, b) == 1)
            for (int variant : {1, 2}) family.insert(plane_family_2U(Int(a), Int(b), variant).normal_form());
      j["matches_family"] = found == family;
    }
    emit(j, out);
  });
}

um_status um_coset_certificate(const um_form* form, const char* set_json, size_t n, char** out) {
  return guard([&] {
    require(form, "form");
    const json parsed = parse_json(set_json, "invariant set");
    std::vector<Vec> set;
    if (parsed.is_array() && !parsed.empty() && parsed.front().is_array())
      for (const auto& v : parsed) set.push_back(vec_from_json(v));
    else
      set.push_back(vec_from_json(parsed));
    const CosetCertificate cert = coset_certificate(form->form, set, n);
    json j = to_json(cert);
    const std::string check = check_coset_certificate(cert);
    j["check"] = check.empty() ? "ok" : check;
    emit(j, out);
  });
}

um_status um_lambda2(const char* matrix_json, char** out) {
  return guard([&] {
    const IntMatrix a = matrix_from_json(parse_json(matrix_json, "matrix"));
    json j = to_json(lambda2(a));
    // Name the image when it is a known wall element.
    for (const char* word : {"I", "n1n2", "s1s2", "p12n1", "a12", "n3", "s3", "n3s3"})
      if (exterior_square(a) == wall_element(word)) j["named"] = word;
    emit(j, out);
  });
}

um_status um_kodaira(int64_t k_dot_omega, int64_t k_squared, char** out) {
  return guard([&] {
    const Kodaira k = kodaira_dimension(Int(static_cast<long>(k_dot_omega)), Int(static_cast<long>(k_squared)));
    emit({{"k_dot_omega", k_dot_omega}, {"k_squared", k_squared}, {"kodaira", to_string(k)}}, out);
  });
}

um_status um_cy_table(char** out) {
  return guard([&] {
    json rows = json::array();
    for (const auto& r : cy_table())
      rows.push_back({{"label", r.label},
                      {"b1", r.b1},
                      {"b2", r.b2},
                      {"b_plus", r.b_plus},
                      {"chi", r.chi},
                      {"sigma", r.sigma},
                      {"consistent", r.consistent()},
                      {"canonical_norm", to_json(canonical_norm(r.chi, r.sigma))}});
    emit(rows, out);
  });
}

um_status um_kt(int64_t lambda, const char* phi_t_json, size_t witness, uint64_t seed, char** out) {
  return guard([&] {
    const KTAlgebra alg = kt_algebra(static_cast<long>(lambda));
    json j = {{"algebra", to_json(alg)}, {"wedge_image", to_json(wedge_image(alg))}};
    if (phi_t_json) {
      const json t = json::parse(phi_t_json);
      IntMatrix m = t.is_array() && t.size() == 4 && !t.front().is_array()
                        ? IntMatrix::from_rows(std::vector<std::vector<Int>>{
                              {int_from_json(t[0]), int_from_json(t[1])}, {int_from_json(t[2]), int_from_json(t[3])}})
                        : matrix_from_json(t);
      j["phi_T"] = to_json(solve_phi_T(static_cast<long>(lambda), m, seed));
    }
    if (witness > 0) j["witness"] = to_json(kt_infinite_index_witness(witness));
    emit(j, out);
  });
}

um_status um_verify_paper(const char* target, uint64_t seed, char** out) {
  return guard([&] {
    require(target, "target");
    emit(verify_paper(target, seed), out);
  });
}

}  // extern "C"
