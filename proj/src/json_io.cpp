#include "unimod/json_io.hpp"

namespace unimod {

json to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json to_json(const Rat& v) {
  if (v.get_den() == 1) return to_json(Int(v.get_num()));
  return v.get_str();
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json to_json(const GramForm& form) { return {{"dim", form.dim()}, {"gram", to_json(form.gram())}}; }

json to_json(const FormInvariants& inv) {
  return {{"rank", inv.rank},
          {"b_plus", inv.b_plus},
          {"b_minus", inv.b_minus},
          {"signature", inv.signature},
          {"parity", to_string(inv.parity)},
          {"definiteness", to_string(inv.definiteness)},
          {"finite_automorphism_group", inv.finite_automorphism_group}};
}

json to_json(const StandardSpec& spec) {
  return {{"ones", spec.ones},
          {"minus_ones", spec.minus_ones},
          {"hyperbolic", spec.hyperbolic},
          {"e8", spec.e8},
          {"description", describe(spec)}};
}

json to_json(const ComponentInvariant& c) { return {{"eps_det", c.eps_det}, {"eps_plus", c.eps_plus}}; }

json to_json(const EscapeTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step = {{"gamma", to_json(s.gamma)}, {"vector", to_json(s.vector)}};
    if (trace.kind == EscapeKind::even) step["case"] = s.case_label;
    steps.push_back(step);
  }
  json out = {{"kind", to_string(trace.kind)},
              {"form", to_json(trace.form)},
              {"start", to_json(trace.start)},
              {"steps", steps},
              {"tracked_index", trace.tracked_index}};
  if (trace.kind == EscapeKind::even) out["direction"] = trace.direction;
  return out;
}

json to_json(const IsotropicPlane& plane) {
  return {{"rows", to_json(plane.rows())}, {"normal_form", to_json(plane.normal_form())}};
}

json to_json(const PlaneOrbit& orbit) {
  json planes = json::array();
  for (std::size_t i = 0; i < orbit.planes.size(); ++i) {
    json p = to_json(orbit.planes[i]);
    p["word"] = orbit.words[i];
    p["witness"] = to_json(orbit.witnesses[i].matrix());
    planes.push_back(p);
  }
  return {{"count", orbit.planes.size()}, {"planes", planes}};
}

json to_json(const CosetCertificate& cert) {
  json set = json::array(), witnesses = json::array(), images = json::array();
  for (const Vec& v : cert.invariant_set) set.push_back(to_json(v));
  for (const Isometry& g : cert.witnesses) witnesses.push_back(to_json(g.matrix()));
  for (const auto& img : cert.images) {
    json one = json::array();
    for (const Vec& v : img) one.push_back(to_json(v));
    images.push_back(one);
  }
  json out = {{"form", to_json(cert.form)}, {"invariant_set", set}, {"witnesses", witnesses}, {"images", images}};
  if (cert.trace) out["trace"] = to_json(*cert.trace);
  return out;
}

json to_json(const Lambda2Report& report) {
  json out = {{"input", to_json(report.input)},
              {"output", to_json(report.output)},
              {"gram_preserved", report.gram_preserved}};
  out["component"] = report.component ? to_json(*report.component) : json(nullptr);
  return out;
}

json to_json(const IndexCertificate& cert) {
  json values = json::array();
  for (const auto& [label, c] : cert.coset_values) values.push_back({{"element", label}, {"component", to_json(c)}});
  return {{"seed", cert.seed},
          {"samples", cert.samples},
          {"word_length", cert.word_length},
          {"nontrivial_samples", cert.nontrivial_samples},
          {"coset_values", values},
          {"values_distinct", cert.values_distinct},
          {"holds", cert.holds},
          {"conclusion",
           "every sampled image has component (+1,+1) while I, n3, s3, n3s3 take four distinct values, so the image "
           "misses three cosets: index >= 4. The bound index <= 4 is not certified here."}};
}

json to_json(const ReplayTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"step", s.step},
                     {"relation", s.relation},
                     {"instance", s.instance},
                     {"substitution", s.substitution},
                     {"derived", s.derived}});
  return {{"target", trace.target},
          {"target_matrix", to_json(trace.target_matrix)},
          {"steps", steps},
          {"forced_image", to_json(trace.forced_image)},
          {"closed", trace.closed}};
}

json to_json(const KTAlgebra& alg) {
  json forms = json::array();
  for (const Vec& f : alg.two_forms) forms.push_back(to_json(f));
  return {{"lambda", alg.lambda},
          {"one_forms", {"dx", "dy", "dz-lambda*y*dx", "dt"}},
          {"two_form_basis", {"e12", "e13", "e14", "e23", "e24", "e34"}},
          {"F", forms},
          {"h2_gram", to_json(alg.h2_gram)},
          {"closed", alg.closed},
          {"spans_h2", alg.spans_h2}};
}

json to_json(const WedgeImage& image) {
  json products = json::object();
  for (const auto& [name, coords] : image.products) products[name] = to_json(coords);
  return {{"products", products}, {"plane", to_json(image.plane)}};
}

json to_json(const PhiT& phi) {
  json images = json::array();
  for (const Vec& v : phi.images) images.push_back(to_json(v));
  return {{"lambda", phi.lambda},
          {"T", to_json(phi.t)},
          {"B", to_json(phi.b)},
          {"v", {to_json(phi.v[0]), to_json(phi.v[1])}},
          {"generator_images", images},
          {"polynomial_identity", phi.polynomial_identity},
          {"sample_points", phi.sample_points}};
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::invalid_argument, "not an integer: " + j.get<std::string>());
    return v;
  }
  throw Error(ErrorCode::invalid_argument, "expected an integer, got " + j.dump());
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::invalid_argument, "expected an array of integers");
  Vec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::invalid_argument, "expected a nonempty array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw Error(ErrorCode::invalid_argument, "ragged matrix");
  return IntMatrix::from_rows(rows);
}

GramForm form_from_json(const json& j) {
  if (j.is_string()) return parse_form(j.get<std::string>());
  if (j.is_object()) {
    if (!j.contains("gram")) throw Error(ErrorCode::invalid_argument, "form object needs a \"gram\" field");
    IntMatrix g = matrix_from_json(j.at("gram"));
    if (j.contains("dim") && int_from_json(j.at("dim")) != static_cast<long>(g.rows()))
      throw Error(ErrorCode::dimension_mismatch, "\"dim\" does not match the Gram matrix");
    return GramForm(std::move(g));
  }
  return GramForm(matrix_from_json(j));
}

GramForm form_from_text(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  if (!j.is_discarded()) return form_from_json(j);
  return parse_form(text);
}

}  // namespace unimod
