// unimod command-line front end. Talks to the library only through unimod.h;
// json.hpp is used here just to re-indent the returned documents.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "unimod/unimod.h"

namespace {

using ojson = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kInvalid = 2 };

struct Options {
  std::uint64_t seed = 1;
  long bound = 5;
  int indent = 2;
  std::string out;
};

int exit_for(um_status st) {
  switch (st) {
    case UM_OK: return kPass;
    case UM_ERR_BUDGET_EXHAUSTED:
    case UM_ERR_VERIFICATION_FAILED:
    case UM_ERR_INTERNAL: return kFail;
    default: return kInvalid;
  }
}

int report_error(um_status st) {
  std::cerr << "error (" << um_status_name(st) << "): " << um_last_error() << "\n";
  return exit_for(st);
}

// Takes ownership of `raw`. Returns the parsed document so callers can
// decide on the exit code.
ojson print(char* raw, const Options& opt) {
  ojson doc = ojson::parse(raw);
  um_string_free(raw);
  const std::string text = opt.indent >= 0 ? doc.dump(opt.indent) : doc.dump();
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot write " + opt.out);
    f << text << "\n";
  }
  std::cout << text << "\n";
  return doc;
}

// "1,2,3" or "[1,2,3]" -> "[1,2,3]".
std::string vector_json(const std::string& s) {
  if (!s.empty() && s.front() == '[') return s;
  return "[" + s + "]";
}

class Form {
 public:
  explicit Form(const std::string& text) { st_ = um_form_parse(text.c_str(), &f_); }
  ~Form() { um_form_free(f_); }
  Form(const Form&) = delete;
  Form& operator=(const Form&) = delete;
  um_status status() const { return st_; }
  const um_form* get() const { return f_; }

 private:
  um_form* f_ = nullptr;
  um_status st_;
};

template <class Call>
int run(Call&& call, const Options& opt, bool (*ok)(const ojson&) = nullptr) {
  char* raw = nullptr;
  const um_status st = call(&raw);
  if (st != UM_OK) return report_error(st);
  const ojson doc = print(raw, opt);
  return ok && !ok(doc) ? kFail : kPass;
}

template <class Call>
int with_form(const std::string& text, Call&& call, const Options& opt, bool (*ok)(const ojson&) = nullptr) {
  Form form(text);
  if (form.status() != UM_OK) return report_error(form.status());
  return run([&](char** out) { return call(form.get(), out); }, opt, ok);
}

bool check_ok(const ojson& doc) { return doc.value("check", "") == "ok"; }
bool status_pass(const ojson& doc) { return doc.value("status", "") == "pass"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice, orbit and exterior-square computations with replayable certificates"};
  app.set_version_flag("--version", std::string(um_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--bound", opt.bound, "Coefficient bound for enumerations")->capture_default_str();
  app.add_option("--json-indent", opt.indent, "Indentation of the JSON output (-1 for compact)")
      ->capture_default_str();
  app.add_option("--out", opt.out, "Also write the JSON document to this file");

  std::string target, form_text, start, matrix, set, phi_t;
  std::size_t steps = 10, count = 20, n = 50, witness = 0;
  long long k = 0, kw = 0, k2 = 0, lambda = 1;

  auto* verify = app.add_subcommand("verify-paper", "Run a verification target and emit its certificate");
  verify->add_option("target", target, "thm2.2, prop2.4, lemma2.5, lemma2.6, prop4.2, prop4.3, def1.1 or all")
      ->required();

  auto* classify = app.add_subcommand("classify", "Invariants and canonical representative of a form");
  classify->add_option("--form", form_text, "Form shorthand (2U+E8, <1>+2<-1>) or Gram matrix JSON")->required();

  auto* esc = app.add_subcommand("escape", "Reflection escape trace from a start vector");
  esc->add_option("--form", form_text, "Form")->required();
  esc->add_option("--start", start, "Start vector, e.g. 0,0,1")->required();
  esc->add_option("--steps", steps, "Number of reflection steps")->capture_default_str();

  auto* fam = app.add_subcommand("char-family", "Characteristic vectors of norm signature + 8k");
  fam->add_option("--form", form_text, "Form")->required();
  fam->add_option("--k", k, "Shift k")->capture_default_str();
  fam->add_option("--count", count, "Number of vectors")->capture_default_str();

  auto* planes = app.add_subcommand("planes", "Isotropic planes with coefficients bounded by --bound");
  planes->add_option("--form", form_text, "Form")->required();

  auto* l2 = app.add_subcommand("lambda2", "Exterior square of a 4x4 integer matrix");
  l2->add_option("--matrix", matrix, "Matrix as JSON rows")->required();

  auto* kod = app.add_subcommand("kodaira", "Kodaira dimension from K.omega and K^2");
  kod->add_option("--kw", kw, "K.omega")->required();
  kod->add_option("--k2", k2, "K^2")->required();

  auto* cy = app.add_subcommand("cy-table", "Homological table of symplectic Calabi-Yau surfaces");

  auto* kt = app.add_subcommand("kt", "Invariant forms of the Kodaira-Thurston nilmanifold");
  kt->add_option("--lambda", lambda, "Structure constant (nonzero)")->capture_default_str();
  kt->add_option("--phi-T", phi_t, "Entries a,b,c,d of T in GL(2,Z)");
  kt->add_option("--witness", witness, "Number of distinct wedge-plane images to produce");

  auto* coset = app.add_subcommand("coset", "Coset certificate for an invariant set");
  coset->add_option("--form", form_text, "Form")->required();
  coset->add_option("--set", set, "Vector or JSON list of vectors")->required();
  coset->add_option("--n", n, "Number of witnesses")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    if (*verify)
      return run([&](char** out) { return um_verify_paper(target.c_str(), opt.seed, out); }, opt, status_pass);
    if (*classify) return with_form(form_text, um_classify, opt);
    if (*esc) {
      const std::string v = vector_json(start);
      return with_form(
          form_text, [&](const um_form* f, char** out) { return um_escape(f, v.c_str(), steps, out); }, opt,
          check_ok);
    }
    if (*fam)
      return with_form(
          form_text, [&](const um_form* f, char** out) { return um_char_family(f, k, count, out); }, opt);
    if (*planes)
      return with_form(
          form_text, [&](const um_form* f, char** out) { return um_planes(f, opt.bound, out); }, opt);
    if (*l2) return run([&](char** out) { return um_lambda2(matrix.c_str(), out); }, opt);
    if (*kod) return run([&](char** out) { return um_kodaira(kw, k2, out); }, opt);
    if (*cy) return run(um_cy_table, opt);
    if (*kt) {
      const std::optional<std::string> t = phi_t.empty() ? std::nullopt : std::optional(vector_json(phi_t));
      return run(
          [&](char** out) { return um_kt(lambda, t ? t->c_str() : nullptr, witness, opt.seed, out); }, opt);
    }
    if (*coset) {
      const std::string s = vector_json(set);
      return with_form(
          form_text, [&](const um_form* f, char** out) { return um_coset_certificate(f, s.c_str(), n, out); },
          opt, check_ok);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInvalid;
}
