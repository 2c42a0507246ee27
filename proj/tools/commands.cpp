/*
 * Copyright 2026 The linc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linc/complexes.hpp"
#include "linc/json_io.hpp"
#include "linc/odd_fibers.hpp"
#include "linc/pencil.hpp"
#include "linc/rng.hpp"
#include "linc/sampling.hpp"

namespace linc::cli {
namespace {

constexpr const char* kCertificateVersion = "1";

// FNV-1a over the canonical dump of the inputs node; stable across runs.
std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[i] = digits[h & 0xF];
    h >>= 4;
  }
  return "fnv1a:" + hex;
}

struct Check {
  std::string name;
  std::string claim;
  bool pass = false;
  json witness;  // null = omitted
};

struct Certificate {
  std::string command;
  std::string field;
  json inputs;
  json outputs;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  json to_json() const {
    json j;
    j["version"] = kCertificateVersion;
    j["command"] = command;
    j["field"] = field;
    j["inputs"] = inputs;
    j["inputs_digest"] = fnv1a_hex(inputs.dump());
    j["outputs"] = outputs;
    json cs = json::array();
    for (const auto& c : checks) {
      json e;
      e["name"] = c.name;
      e["claim"] = c.claim;
      e["pass"] = c.pass;
      if (!c.witness.is_null()) e["witness"] = c.witness;
      cs.push_back(std::move(e));
    }
    j["checks"] = std::move(cs);
    j["pass"] = pass();
    return j;
  }

  std::string text() const {
    std::ostringstream os;
    os << "certificate: " << command << "\n";
    os << "field: " << field << "\n";
    os << "inputs digest: " << fnv1a_hex(inputs.dump()) << "\n";
    os << "outputs:\n";
    std::istringstream body(outputs.dump(2));
    for (std::string line; std::getline(body, line);) os << "  " << line << "\n";
    os << "checks:\n";
    for (const auto& c : checks) {
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.claim
         << "\n";
      // Failed checks show their witness so the certificate explains itself.
      if (!c.pass && !c.witness.is_null()) {
        os << "    witness: " << c.witness.dump() << "\n";
      }
    }
    os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

int emit(const Certificate& cert, const RunConfig& cfg, std::ostream& out) {
  json j = cert.to_json();
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << cert.text();
  }
  if (!cfg.output_path.empty()) {
    std::ofstream file(cfg.output_path);
    if (!file) {
      throw std::invalid_argument("cannot write certificate file: " + cfg.output_path);
    }
    file << j.dump(2) << "\n";
  }
  return cert.pass() ? exit_pass : exit_fail;
}

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

// The field tag carried by the document wins; an explicit non-default
// --field must agree with it.
std::string resolve_field(const RunConfig& cfg, const json& input) {
  std::string file_tag;
  if (input.is_object() && input.contains("field") && input["field"].is_string()) {
    file_tag = input["field"].get<std::string>();
  }
  if (file_tag.empty()) return cfg.field;
  if (cfg.field != "Q" && cfg.field != file_tag) {
    throw std::invalid_argument("--field " + cfg.field +
                                " conflicts with input field tag " + file_tag);
  }
  return file_tag;
}

template <typename F>
Certificate dispatch_field(const std::string& tag, F&& fn) {
  FieldSpec spec = FieldSpec::parse(tag);
  if (spec.is_q) return fn(Rational());
  return fn(Fp(0, spec.p));
}

Check genericity_failure(const genericity_error& e, json detail = json()) {
  json w;
  w["kind"] = to_string(e.kind());
  w["message"] = e.what();
  if (!detail.is_null()) w["detail"] = std::move(detail);
  return Check{"genericity", "the input is in general position for this operation",
               false, std::move(w)};
}

// Matrix-times-vector in the polynomial ring of binary forms.
template <exact_field K>
std::vector<BinaryForm<K>> ring_matvec(const Matrix<BinaryForm<K>>& m,
                                       const std::vector<BinaryForm<K>>& v) {
  std::vector<BinaryForm<K>> out;
  out.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    BinaryForm<K> acc = m(i, 0) * v[0];
    for (int j = 1; j < m.cols(); ++j) acc = acc + m(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

template <exact_field K>
std::vector<K> scalar_matvec(const Matrix<K>& m, const std::vector<K>& v,
                             const K& exemplar) {
  std::vector<K> out;
  out.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    K acc = exemplar.zero();
    for (int j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

template <exact_field K>
std::vector<std::string> sorted_line_keys(const std::vector<ProjSubspace<K>>& lines) {
  std::vector<std::string> keys;
  keys.reserve(lines.size());
  for (const auto& l : lines) keys.push_back(l.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Distinct evaluation points for polynomial identity spot checks: [0:1] and
// [1:k]; over a small prime field fewer than the requested count may exist.
template <exact_field K>
std::vector<PointP1<K>> sample_points(int count, const K& exemplar) {
  std::vector<PointP1<K>> pts;
  std::set<std::string> seen;
  PointP1<K> inf(exemplar.zero(), exemplar.one());
  seen.insert(inf.str());
  pts.push_back(inf);
  for (int k = 0; static_cast<int>(pts.size()) < count && k < 4 * count; ++k) {
    PointP1<K> pt(exemplar.one(), exemplar.from_int(k));
    if (seen.insert(pt.str()).second) pts.push_back(pt);
  }
  return pts;
}

template <exact_field K>
json corank_profile_json(const CorankProfile<K>& prof) {
  json items = json::array();
  for (const auto& it : prof.items) {
    json e;
    e["point"] = point_to_json(it.point);
    e["multiplicity"] = std::to_string(it.multiplicity);
    e["corank"] = std::to_string(it.corank);
    items.push_back(std::move(e));
  }
  json j;
  j["items"] = std::move(items);
  j["nonsplit_degree"] = std::to_string(prof.nonsplit_degree);
  j["pfaffian"] = form_to_json(prof.pfaffian);
  return j;
}

// --- pfaffian ----------------------------------------------------------------

template <exact_field K>
Certificate cmd_pfaffian_matrix(const json& input, const json& mat_json,
                                const std::string& tag, const K& exemplar) {
  SkewMatrix<K> a = skew_from_json<K>(mat_json, exemplar);
  const int n = a.size();
  Certificate cert{"pfaffian", tag, input, json(), {}};
  cert.outputs["n"] = std::to_string(n);
  if (n % 2 == 0) {
    K pf = pfaffian(a);
    K det = determinant(a.matrix());
    cert.outputs["pfaffian"] = scalar_to_string<K>(pf);
    json w;
    w["pfaffian"] = scalar_to_string<K>(pf);
    w["determinant"] = scalar_to_string<K>(det);
    cert.checks.push_back(
        {"pfaffian-squared-is-determinant", "Pf(A)^2 = det(A)", pf * pf == det,
         std::move(w)});
  } else {
    std::vector<K> p = subpfaffian_vector(a);
    json arr = json::array();
    for (const auto& x : p) arr.push_back(scalar_to_string<K>(x));
    cert.outputs["subpfaffians"] = std::move(arr);
    std::vector<K> prod = scalar_matvec(a.matrix(), p, exemplar);
    bool ok = true;
    for (const auto& x : prod) ok = ok && x.is_zero();
    cert.checks.push_back(
        {"kernel-identity", "A p = 0 for the signed sub-Pfaffian vector p", ok,
         json()});
  }
  return cert;
}

template <exact_field K>
Certificate cmd_pfaffian_pencil(const json& input, const K& exemplar,
                                const std::string& tag) {
  SkewPencil<K> p = pencil_from_json<K>(input, exemplar);
  const int n = p.size();
  Certificate cert{"pfaffian", tag, input, json(), {}};
  cert.outputs["n"] = std::to_string(n);
  if (n % 2 == 0) {
    BinaryForm<K> pf = pencil_pf(p, exemplar);
    cert.outputs["pfaffian"] = form_to_json(pf);
    auto pts = sample_points(n + 1, exemplar);
    bool ok = true;
    for (const auto& pt : pts) {
      K v = pf.eval_at(pt);
      K det = determinant(pencil_eval(p, pt).matrix());
      ok = ok && (v * v == det);
    }
    json w;
    w["sample_points"] = std::to_string(pts.size());
    cert.checks.push_back({"pfaffian-squared-is-determinant",
                           "Pf(N(y))^2 = det(N(y)) at sample points", ok,
                           std::move(w)});
  } else {
    std::vector<BinaryForm<K>> sub = pencil_subpf(p, exemplar);
    cert.outputs["subpfaffians"] = forms_to_json(sub);
    auto prod = ring_matvec(form_matrix(p, exemplar).matrix(), sub);
    bool ok = true;
    for (const auto& f : prod) ok = ok && f.is_zero();
    cert.checks.push_back(
        {"kernel-identity", "N(y) p(y) = 0 identically", ok, json()});
  }
  return cert;
}

Certificate cmd_pfaffian(const RunConfig& cfg) {
  json input = load_input(cfg.input_path);
  std::string tag = resolve_field(cfg, input);
  return dispatch_field(tag, [&](auto exemplar) {
    using K = decltype(exemplar);
    if (input.is_array()) {
      return cmd_pfaffian_matrix<K>(input, input, tag, exemplar);
    }
    if (input.is_object() && input.contains("N0")) {
      return cmd_pfaffian_pencil<K>(input, exemplar, tag);
    }
    if (input.is_object() && input.contains("matrix")) {
      return cmd_pfaffian_matrix<K>(input, input["matrix"], tag, exemplar);
    }
    throw std::invalid_argument(
        "pfaffian input must be a matrix array, a {\"matrix\": ...} document, "
        "or a pencil document with N0 and N1");
  });
}

// --- deglocus ----------------------------------------------------------------

template <exact_field K>
Certificate cmd_deglocus_even(const json& input, const SkewPencil<K>& p,
                              const std::string& tag, const K& exemplar) {
  const int n = p.size();
  Certificate cert{"deglocus", tag, input, json(), {}};
  cert.outputs["n"] = std::to_string(n);
  try {
    DegLocusEven<K> locus = deg_locus_even(p, exemplar);
    CorankProfile<K> prof = corank_profile(p, exemplar);
    cert.outputs["locus"] = deg_locus_even_to_json(locus);
    cert.outputs["profile"] = corank_profile_json(prof);

    cert.checks.push_back({"root-count",
                           "the Pfaffian has " + std::to_string(n / 2) +
                               " distinct roots in the base field",
                           static_cast<int>(locus.items.size()) == n / 2,
                           json{{"roots", std::to_string(locus.items.size())}}});
    bool coranks_ok = true;
    for (const auto& it : prof.items) coranks_ok = coranks_ok && it.corank == 2;
    cert.checks.push_back({"corank-two",
                           "every rank-drop point has corank exactly 2", coranks_ok,
                           json()});
    std::vector<ProjSubspace<K>> lines;
    lines.reserve(locus.items.size());
    for (const auto& it : locus.items) lines.push_back(it.line);
    int span_dim = join(lines, exemplar).proj_dim();
    cert.checks.push_back(
        {"span", "the recovered lines span P^" + std::to_string(n - 1),
         span_dim == n - 1, json{{"span_projective_dim", std::to_string(span_dim)}}});
  } catch (const genericity_error& e) {
    json detail;
    if (e.kind() != genericity::degenerate_pencil) {
      CorankProfile<K> prof = corank_profile(p, exemplar);
      detail = corank_profile_json(prof);
    }
    cert.checks.push_back(genericity_failure(e, std::move(detail)));
  }
  return cert;
}

template <exact_field K>
Certificate cmd_deglocus_odd(const json& input, const SkewPencil<K>& p,
                             const std::string& tag, const K& exemplar) {
  const int n = p.size();
  Certificate cert{"deglocus", tag, input, json(), {}};
  cert.outputs["n"] = std::to_string(n);
  try {
    DegLocusOdd<K> locus = deg_locus_odd(p, exemplar);
    cert.outputs["forms"] = forms_to_json(locus.forms);
    int rank = coeff_matrix_rank(locus.forms);
    cert.checks.push_back({"parameterization-spans",
                           "the sub-Pfaffian forms span the space of degree-" +
                               std::to_string((n - 1) / 2) + " forms",
                           rank == (n + 1) / 2,
                           json{{"coefficient_rank", std::to_string(rank)}}});
    BinaryForm<K> g = BinaryForm<K>::zero_of_degree(locus.forms[0].degree(), exemplar);
    for (const auto& f : locus.forms) {
      if (f.is_zero()) continue;
      g = g.is_zero() ? f : gcd(g, f);
    }
    cert.checks.push_back({"no-base-points",
                           "the sub-Pfaffian forms have no common root",
                           g.degree() == 0,
                           json{{"gcd_degree", std::to_string(g.degree())}}});
  } catch (const genericity_error& e) {
    json detail;
    if (e.kind() == genericity::base_points) {
      // Name the base points: the common factor and its rational roots.
      std::vector<BinaryForm<K>> sub = pencil_subpf(p, exemplar);
      BinaryForm<K> g = BinaryForm<K>::zero_of_degree(sub[0].degree(), exemplar);
      for (const auto& f : sub) {
        if (f.is_zero()) continue;
        g = g.is_zero() ? f : gcd(g, f);
      }
      detail["common_factor"] = form_to_json(g);
      try {
        json pts = json::array();
        for (const auto& [pt, mult] : roots(g).roots) pts.push_back(point_to_json(pt));
        detail["base_points"] = std::move(pts);
      } catch (const std::runtime_error&) {
        // Root scan unavailable for this field; the common factor says enough.
      }
    }
    cert.checks.push_back(genericity_failure(e, std::move(detail)));
  }
  return cert;
}

Certificate cmd_deglocus(const RunConfig& cfg) {
  json input = load_input(cfg.input_path);
  std::string tag = resolve_field(cfg, input);
  return dispatch_field(tag, [&](auto exemplar) {
    using K = decltype(exemplar);
    SkewPencil<K> p = pencil_from_json<K>(input, exemplar);
    if (p.size() % 2 == 0) return cmd_deglocus_even<K>(input, p, tag, exemplar);
    return cmd_deglocus_odd<K>(input, p, tag, exemplar);
  });
}

// --- even-fiber --------------------------------------------------------------

template <exact_field K>
Certificate cmd_even_fiber_impl(const RunConfig& cfg, const std::string& tag,
                                const K& exemplar) {
  Rng master(cfg.seed);
  std::vector<ProjSubspace<K>> lines;
  if (!cfg.input_path.empty()) {
    json doc = load_input(cfg.input_path);
    lines = lines_from_json<K>(doc, exemplar);
    if (cfg.n != 0 && cfg.n != lines[0].ambient_dim()) {
      throw std::invalid_argument("--n does not match the input lines");
    }
  } else {
    if (cfg.n < 4 || cfg.n % 2 != 0) {
      throw std::invalid_argument("even-fiber without --input requires even --n >= 4");
    }
    lines = random_spanning_lines(cfg.n, master, exemplar);
  }
  const int n = lines[0].ambient_dim();
  std::uint64_t sample_seed = master.next_u64();

  Certificate cert{"even-fiber", tag, json(), json(), {}};
  cert.inputs["n"] = std::to_string(n);
  cert.inputs["seed"] = std::to_string(cfg.seed);
  cert.inputs["lines"] = lines_to_json(lines, exemplar);
  cert.inputs["lines_source"] = cfg.input_path.empty() ? "seeded-random" : "file";

  try {
    SkewPencil<K> pencil = even_fiber_sample(lines, sample_seed, exemplar);
    cert.outputs["pencil"] = pencil_to_json(pencil, exemplar);
    cert.outputs["sample_seed"] = std::to_string(sample_seed);

    DegLocusEven<K> locus = deg_locus_even(pencil, exemplar);
    cert.outputs["locus"] = deg_locus_even_to_json(locus);
    cert.checks.push_back({"locus-roundtrip",
                           "the degeneracy locus equals the input line set",
                           locus.line_keys() == sorted_line_keys(lines), json()});

    CorankProfile<K> prof = corank_profile(pencil, exemplar);
    bool prof_ok = static_cast<int>(prof.items.size()) == n / 2 &&
                   prof.nonsplit_degree == 0;
    for (const auto& it : prof.items) {
      prof_ok = prof_ok && it.corank == 2 && it.multiplicity == 1;
    }
    cert.checks.push_back({"corank-profile",
                           "exactly " + std::to_string(n / 2) +
                               " rank-drop points, all simple and of corank 2",
                           prof_ok, corank_profile_json(prof)});

    SkewPencil<K> transported =
        even_fiber_sample_transported(lines, sample_seed, exemplar);
    cert.checks.push_back(
        {"construction-paths-agree",
         "direct and normalize-and-transport constructions return the identical pencil",
         pencil == transported, json()});

    SigmaFrame<K> frame = build_sigma(lines, exemplar);
    cert.checks.push_back(
        {"sigma-dimension",
         "sigma has projective dimension " + std::to_string((n - 2) / 2),
         frame.sigma.proj_dim() == (n - 2) / 2,
         json{{"sigma_projective_dim", std::to_string(frame.sigma.proj_dim())}}});
  } catch (const genericity_error& e) {
    cert.checks.push_back(genericity_failure(e));
  }
  return cert;
}

Certificate cmd_even_fiber(const RunConfig& cfg) {
  std::string tag = cfg.field;
  if (!cfg.input_path.empty()) {
    tag = resolve_field(cfg, load_input(cfg.input_path));
  }
  return dispatch_field(tag, [&](auto exemplar) {
    return cmd_even_fiber_impl(cfg, tag, exemplar);
  });
}

// --- gauss-dim ---------------------------------------------------------------

template <exact_field K>
Certificate cmd_gauss_dim_impl(const RunConfig& cfg, const std::string& tag,
                               const K& exemplar) {
  if (cfg.n < 4 || cfg.n % 2 != 0) {
    throw std::invalid_argument("gauss-dim requires even --n >= 4");
  }
  const int n = cfg.n;
  const int expected = (n - 1) * (n - 4) / 2;
  Certificate cert{"gauss-dim", tag, json(), json(), {}};
  cert.inputs["n"] = std::to_string(n);
  cert.inputs["seed"] = std::to_string(cfg.seed);
  cert.inputs["trials"] = std::to_string(cfg.trials);
  cert.outputs["expected_projective_dimension"] = std::to_string(expected);

  json failures = json::array();
  json sample;
  try {
    for (int t = 0; t < cfg.trials; ++t) {
      Rng rng = Rng(cfg.seed).split(static_cast<std::uint64_t>(t));
      ProjSubspace<K> line = random_line(n, rng, exemplar);
      int dim = gauss_fiber(line, exemplar).proj_dim();
      if (t == 0) {
        sample["line"] = subspace_to_json(line);
        sample["projective_dimension"] = std::to_string(dim);
      }
      if (dim != expected) {
        json bad;
        bad["trial"] = std::to_string(t);
        bad["line"] = subspace_to_json(line);
        bad["projective_dimension"] = std::to_string(dim);
        failures.push_back(std::move(bad));
      }
    }
  } catch (const genericity_error& e) {
    cert.checks.push_back(genericity_failure(e));
    return cert;
  }
  cert.outputs["first_trial"] = std::move(sample);
  json w;
  w["trials"] = std::to_string(cfg.trials);
  w["failures"] = std::move(failures);
  bool ok = w["failures"].empty();
  cert.checks.push_back({"gauss-fiber-dimension",
                         "the fiber over a line has projective dimension "
                         "(n-1)(n-4)/2 = " + std::to_string(expected),
                         ok, std::move(w)});
  return cert;
}

Certificate cmd_gauss_dim(const RunConfig& cfg) {
  return dispatch_field(cfg.field, [&](auto exemplar) {
    return cmd_gauss_dim_impl(cfg, cfg.field, exemplar);
  });
}

// --- odd-realize and odd-fiber -------------------------------------------------

template <exact_field K>
std::pair<FormVector<K>, json> odd_command_forms(const RunConfig& cfg, Rng& master,
                                                 const K& exemplar) {
  if (!cfg.input_path.empty()) {
    json doc = load_input(cfg.input_path);
    if (!doc.is_array() && !(doc.is_object() && doc.contains("forms"))) {
      throw std::invalid_argument(
          "forms input must be an array of forms or a {\"forms\": ...} document");
    }
    const json& arr = doc.is_array() ? doc : doc["forms"];
    std::vector<BinaryForm<K>> forms = forms_from_json<K>(arr, exemplar);
    FormVector<K> fv(std::move(forms));
    if (cfg.n != 0 && cfg.n != fv.n()) {
      throw std::invalid_argument("--n does not match the input forms");
    }
    return {std::move(fv), json("file")};
  }
  if (cfg.n < 3 || cfg.n % 2 == 0) {
    throw std::invalid_argument("this command without --input requires odd --n >= 3");
  }
  FormVector<K> fv = random_spanning_forms(cfg.n, master, exemplar);
  return {std::move(fv), json("seeded-random")};
}

template <exact_field K>
Certificate cmd_odd_realize_impl(const RunConfig& cfg, const std::string& tag,
                                 const K& exemplar) {
  Rng master(cfg.seed);
  auto [fv, source] = odd_command_forms(cfg, master, exemplar);
  const int n = fv.n();
  Certificate cert{"odd-realize", tag, json(), json(), {}};
  cert.inputs["n"] = std::to_string(n);
  cert.inputs["seed"] = std::to_string(cfg.seed);
  cert.inputs["forms"] = forms_to_json(fv.forms);
  cert.inputs["forms_source"] = source;

  int rank = coeff_matrix_rank(fv.forms);
  cert.checks.push_back({"input-spanning",
                         "the input forms span the space of degree-" +
                             std::to_string(fv.form_degree()) + " forms",
                         fv.spanning(),
                         json{{"coefficient_rank", std::to_string(rank)}}});
  if (!fv.spanning()) return cert;

  try {
    SkewPencil<K> p = realize_pfaffians(fv, exemplar);
    cert.outputs["pencil"] = pencil_to_json(p, exemplar);
    cert.checks.push_back(
        {"subpfaffian-proportional",
         "the sub-Pfaffian vector of the output pencil is proportional to the "
         "input forms",
         subpf_proportional(p, fv.forms, exemplar), json()});
  } catch (const genericity_error& e) {
    cert.checks.push_back(genericity_failure(e));
  }
  return cert;
}

Certificate cmd_odd_realize(const RunConfig& cfg) {
  std::string tag = cfg.field;
  if (!cfg.input_path.empty()) tag = resolve_field(cfg, load_input(cfg.input_path));
  return dispatch_field(tag, [&](auto exemplar) {
    return cmd_odd_realize_impl(cfg, tag, exemplar);
  });
}

template <exact_field K>
Certificate cmd_odd_fiber_impl(const RunConfig& cfg, const std::string& tag,
                               const K& exemplar) {
  Rng master(cfg.seed);
  auto [fv, source] = odd_command_forms(cfg, master, exemplar);
  const int n = fv.n();
  const int expected = (n - 1) * (n - 2) / 2;
  std::uint64_t sample_seed = master.next_u64();

  Certificate cert{"odd-fiber", tag, json(), json(), {}};
  cert.inputs["n"] = std::to_string(n);
  cert.inputs["seed"] = std::to_string(cfg.seed);
  cert.inputs["forms"] = forms_to_json(fv.forms);
  cert.inputs["forms_source"] = source;

  try {
    PencilSolutionSpace<K> space = fiber_system(fv, exemplar);
    cert.outputs["dimension"] = std::to_string(space.dim());
    json basis = json::array();
    for (const auto& b : space.basis) basis.push_back(pencil_to_json(b, exemplar));
    cert.outputs["basis"] = std::move(basis);
    cert.checks.push_back(
        {"solution-space-dimension",
         "the annihilating pencils form a space of dimension (n-1)(n-2)/2 = " +
             std::to_string(expected),
         space.dim() == expected, json()});

    Rng rng(sample_seed);
    SkewPencil<K> sample = fiber_sample(space, rng, exemplar);
    cert.outputs["sample"] = pencil_to_json(sample, exemplar);
    cert.outputs["sample_seed"] = std::to_string(sample_seed);
    cert.checks.push_back(
        {"sample-certified",
         "the sampled pencil's sub-Pfaffian vector is proportional to the "
         "defining forms",
         subpf_proportional(sample, fv.forms, exemplar), json()});
  } catch (const genericity_error& e) {
    cert.checks.push_back(genericity_failure(e));
  }
  return cert;
}

Certificate cmd_odd_fiber(const RunConfig& cfg) {
  std::string tag = cfg.field;
  if (!cfg.input_path.empty()) tag = resolve_field(cfg, load_input(cfg.input_path));
  return dispatch_field(tag, [&](auto exemplar) {
    return cmd_odd_fiber_impl(cfg, tag, exemplar);
  });
}

// --- verify -------------------------------------------------------------------

// Integer cross-checks: with D = n(n-1)/2, the Grassmannian of pencils has
// dimension 2(D-2); subtracting the even fiber dimension n-4 must leave
// n^2-2n, and subtracting the odd fiber dimension (n^2-3n)/2 must leave
// (n^2+n-8)/2.
Check bookkeeping_check() {
  json rows = json::array();
  bool ok = true;
  for (int n = 4; n <= 12; ++n) {
    int dd = n * (n - 1) / 2;
    int gr = 2 * (dd - 2);
    json row;
    row["n"] = std::to_string(n);
    row["pencil_space_dim"] = std::to_string(gr);
    if (n % 2 == 0) {
      int lhs = gr - (n - 4);
      int rhs = n * n - 2 * n;
      row["even_identity"] = std::to_string(lhs) + " = " + std::to_string(rhs);
      ok = ok && lhs == rhs;
    } else {
      int lhs = gr - (n * n - 3 * n) / 2;
      int rhs = (n * n + n - 8) / 2;
      row["odd_identity"] = std::to_string(lhs) + " = " + std::to_string(rhs);
      ok = ok && lhs == rhs;
    }
    rows.push_back(std::move(row));
  }
  return Check{"dimension-bookkeeping",
               "2(D-2) - (n-4) = n^2-2n for even n and 2(D-2) - (n^2-3n)/2 = "
               "(n^2+n-8)/2 for odd n, D = n(n-1)/2, 4 <= n <= 12",
               ok, json{{"table", std::move(rows)}}};
}

template <exact_field K>
void verify_algebra(const RunConfig& cfg, const K& exemplar,
                    std::vector<Check>& checks) {
  json pf_failures = json::array();
  json ker_failures = json::array();
  json pencil_failures = json::array();
  const int even_sizes[] = {2, 4, 6};
  const int odd_sizes[] = {3, 5, 7};
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng(cfg.seed).split(static_cast<std::uint64_t>(t));

    SkewMatrix<K> a = random_skew(even_sizes[t % 3], rng, exemplar);
    K pf = pfaffian(a);
    if (!(pf * pf == determinant(a.matrix()))) {
      pf_failures.push_back(json{{"trial", std::to_string(t)},
                                 {"matrix", skew_to_json(a)}});
    }

    SkewMatrix<K> b = random_skew(odd_sizes[t % 3], rng, exemplar);
    std::vector<K> p = subpfaffian_vector(b);
    bool ker_ok = true;
    for (const auto& x : scalar_matvec(b.matrix(), p, exemplar)) {
      ker_ok = ker_ok && x.is_zero();
    }
    if (!ker_ok) {
      ker_failures.push_back(json{{"trial", std::to_string(t)},
                                  {"matrix", skew_to_json(b)}});
    }

    SkewPencil<K> pc = random_pencil(5, rng, exemplar);
    auto sub = pencil_subpf(pc, exemplar);
    bool pc_ok = true;
    for (const auto& f : ring_matvec(form_matrix(pc, exemplar).matrix(), sub)) {
      pc_ok = pc_ok && f.is_zero();
    }
    if (!pc_ok) {
      pencil_failures.push_back(json{{"trial", std::to_string(t)},
                                     {"pencil", pencil_to_json(pc, exemplar)}});
    }
  }
  json t = json{{"trials", std::to_string(cfg.trials)}};
  json w1 = t;
  w1["failures"] = std::move(pf_failures);
  checks.push_back({"pfaffian-squared-is-determinant",
                    "Pf(A)^2 = det(A) for seeded random skew matrices",
                    w1["failures"].empty(), std::move(w1)});
  json w2 = t;
  w2["failures"] = std::move(ker_failures);
  checks.push_back({"kernel-identity-matrices",
                    "A p(A) = 0 for seeded random odd skew matrices",
                    w2["failures"].empty(), std::move(w2)});
  json w3 = t;
  w3["failures"] = std::move(pencil_failures);
  checks.push_back({"kernel-identity-pencils",
                    "N(y) p(y) = 0 identically for seeded random odd pencils",
                    w3["failures"].empty(), std::move(w3)});
}

template <exact_field K>
void verify_even(const RunConfig& cfg, int n, const K& exemplar,
                 std::vector<Check>& checks) {
  const int gauss_expected = (n - 1) * (n - 4) / 2;
  json roundtrip_failures = json::array();
  json corank_failures = json::array();
  json path_failures = json::array();
  json gauss_failures = json::array();
  json sigma_failures = json::array();
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng(cfg.seed).split(static_cast<std::uint64_t>(t));
    try {
      std::vector<ProjSubspace<K>> lines = random_spanning_lines(n, rng, exemplar);
      std::uint64_t sample_seed = rng.next_u64();
      SkewPencil<K> pencil = even_fiber_sample(lines, sample_seed, exemplar);

      json instance;
      instance["trial"] = std::to_string(t);
      instance["lines"] = lines_to_json(lines, exemplar);
      instance["sample_seed"] = std::to_string(sample_seed);

      DegLocusEven<K> locus = deg_locus_even(pencil, exemplar);
      if (locus.line_keys() != sorted_line_keys(lines)) {
        json bad = instance;
        bad["locus"] = deg_locus_even_to_json(locus);
        roundtrip_failures.push_back(std::move(bad));
      }

      CorankProfile<K> prof = corank_profile(pencil, exemplar);
      bool prof_ok = static_cast<int>(prof.items.size()) == n / 2 &&
                     prof.nonsplit_degree == 0;
      for (const auto& it : prof.items) {
        prof_ok = prof_ok && it.corank == 2 && it.multiplicity == 1;
      }
      if (!prof_ok) {
        json bad = instance;
        bad["profile"] = corank_profile_json(prof);
        corank_failures.push_back(std::move(bad));
      }

      SkewPencil<K> transported =
          even_fiber_sample_transported(lines, sample_seed, exemplar);
      if (!(pencil == transported)) path_failures.push_back(instance);

      int gdim = gauss_fiber(lines[0], exemplar).proj_dim();
      if (gdim != gauss_expected) {
        json bad = instance;
        bad["projective_dimension"] = std::to_string(gdim);
        gauss_failures.push_back(std::move(bad));
      }

      SigmaFrame<K> frame = build_sigma(lines, exemplar);
      if (frame.sigma.proj_dim() != (n - 2) / 2) sigma_failures.push_back(instance);
    } catch (const genericity_error& e) {
      roundtrip_failures.push_back(json{{"trial", std::to_string(t)},
                                        {"error", e.what()},
                                        {"kind", to_string(e.kind())}});
    }
  }
  json t = json{{"trials", std::to_string(cfg.trials)}, {"n", std::to_string(n)}};
  json w1 = t;
  w1["failures"] = std::move(roundtrip_failures);
  checks.push_back({"even-fiber-roundtrip",
                    "sampled pencils have degeneracy locus equal to the input lines",
                    w1["failures"].empty(), std::move(w1)});
  json w2 = t;
  w2["failures"] = std::move(corank_failures);
  checks.push_back({"corank-two-everywhere",
                    "sampled pencils drop rank at exactly n/2 simple points of corank 2",
                    w2["failures"].empty(), std::move(w2)});
  json w3 = t;
  w3["failures"] = std::move(path_failures);
  checks.push_back({"construction-paths-agree",
                    "direct and normalize-and-transport constructions agree",
                    w3["failures"].empty(), std::move(w3)});
  json w4 = t;
  w4["failures"] = std::move(gauss_failures);
  checks.push_back({"gauss-fiber-dimension",
                    "fibers over lines have projective dimension (n-1)(n-4)/2 = " +
                        std::to_string(gauss_expected),
                    w4["failures"].empty(), std::move(w4)});
  json w5 = t;
  w5["failures"] = std::move(sigma_failures);
  checks.push_back({"sigma-dimension",
                    "sigma has projective dimension (n-2)/2 = " +
                        std::to_string((n - 2) / 2),
                    w5["failures"].empty(), std::move(w5)});
}

template <exact_field K>
void verify_odd(const RunConfig& cfg, int n, const K& exemplar,
                std::vector<Check>& checks) {
  const int expected = (n - 1) * (n - 2) / 2;
  json realize_failures = json::array();
  json dim_failures = json::array();
  json inject_failures = json::array();
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng(cfg.seed).split(static_cast<std::uint64_t>(t));
    FormVector<K> fv = random_spanning_forms(n, rng, exemplar);
    json instance;
    instance["trial"] = std::to_string(t);
    instance["forms"] = forms_to_json(fv.forms);

    try {
      SkewPencil<K> realized = realize_pfaffians(fv, exemplar);
      if (!subpf_proportional(realized, fv.forms, exemplar)) {
        json bad = instance;
        bad["pencil"] = pencil_to_json(realized, exemplar);
        realize_failures.push_back(std::move(bad));
      }

      PencilSolutionSpace<K> space = fiber_system(fv, exemplar);
      if (space.dim() != expected) {
        json bad = instance;
        bad["dimension"] = std::to_string(space.dim());
        dim_failures.push_back(std::move(bad));
      }

      if (n >= 5) {
        Rng srng = rng.split(0xF1BEu);
        SkewPencil<K> s = fiber_sample(space, srng, exemplar);
        bool distinct = !pencils_proportional(s, realized, exemplar);
        bool same_locus = deg_locus_odd(s, exemplar).forms ==
                          deg_locus_odd(realized, exemplar).forms;
        if (!(distinct && same_locus)) {
          json bad = instance;
          bad["sample"] = pencil_to_json(s, exemplar);
          bad["distinct"] = distinct;
          bad["same_locus"] = same_locus;
          inject_failures.push_back(std::move(bad));
        }
      }
    } catch (const genericity_error& e) {
      json bad = instance;
      bad["error"] = e.what();
      realize_failures.push_back(std::move(bad));
    }
  }
  json t = json{{"trials", std::to_string(cfg.trials)}, {"n", std::to_string(n)}};
  json w1 = t;
  w1["failures"] = std::move(realize_failures);
  checks.push_back({"odd-realization-proportional",
                    "realized pencils have sub-Pfaffian vector proportional to "
                    "the prescribed forms",
                    w1["failures"].empty(), std::move(w1)});
  json w2 = t;
  w2["failures"] = std::move(dim_failures);
  checks.push_back({"fiber-dimension",
                    "the annihilating solution space has dimension "
                    "(n-1)(n-2)/2 = " + std::to_string(expected),
                    w2["failures"].empty(), std::move(w2)});
  if (n >= 5) {
    json w3 = t;
    w3["failures"] = std::move(inject_failures);
    checks.push_back({"fiber-non-injectivity",
                      "fiber samples are distinct pencils with the identical "
                      "normalized parameterization",
                      w3["failures"].empty(), std::move(w3)});
  }
}

Certificate cmd_verify(const RunConfig& cfg) {
  static const std::set<std::string> suites = {"algebra", "even", "odd", "all"};
  if (suites.find(cfg.suite) == suites.end()) {
    throw std::invalid_argument("unknown suite: " + cfg.suite +
                                " (expected algebra, even, odd, or all)");
  }
  if (cfg.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  if (cfg.n != 0) {
    if (cfg.suite == "even" && (cfg.n < 4 || cfg.n % 2 != 0)) {
      throw std::invalid_argument("the even suite requires even --n >= 4");
    }
    if (cfg.suite == "odd" && (cfg.n < 3 || cfg.n % 2 == 0)) {
      throw std::invalid_argument("the odd suite requires odd --n >= 3");
    }
    if (cfg.suite == "algebra" || cfg.suite == "all") {
      throw std::invalid_argument("--n applies only to the even and odd suites");
    }
  }
  return dispatch_field(cfg.field, [&](auto exemplar) {
    using K = decltype(exemplar);
    Certificate cert{"verify", cfg.field, json(), json(), {}};
    cert.inputs["suite"] = cfg.suite;
    cert.inputs["seed"] = std::to_string(cfg.seed);
    cert.inputs["trials"] = std::to_string(cfg.trials);
    if (cfg.n != 0) cert.inputs["n"] = std::to_string(cfg.n);
    cert.outputs["rng"] = "splitmix64, one stream per trial via split(trial_index)";

    if (cfg.suite == "algebra" || cfg.suite == "all") {
      verify_algebra<K>(cfg, exemplar, cert.checks);
    }
    if (cfg.suite == "even" || cfg.suite == "all") {
      int n = (cfg.suite == "even" && cfg.n != 0) ? cfg.n : 6;
      verify_even<K>(cfg, n, exemplar, cert.checks);
    }
    if (cfg.suite == "odd" || cfg.suite == "all") {
      int n = (cfg.suite == "odd" && cfg.n != 0) ? cfg.n : 5;
      verify_odd<K>(cfg, n, exemplar, cert.checks);
    }
    cert.checks.push_back(bookkeeping_check());
    return cert;
  });
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.format != "json" && cfg.format != "text") {
      throw std::invalid_argument("--format must be json or text");
    }
    Certificate cert;
    if (cfg.command == "pfaffian") {
      if (cfg.input_path.empty()) {
        throw std::invalid_argument("pfaffian requires --input");
      }
      cert = cmd_pfaffian(cfg);
    } else if (cfg.command == "deglocus") {
      if (cfg.input_path.empty()) {
        throw std::invalid_argument("deglocus requires --input");
      }
      cert = cmd_deglocus(cfg);
    } else if (cfg.command == "even-fiber") {
      cert = cmd_even_fiber(cfg);
    } else if (cfg.command == "gauss-dim") {
      cert = cmd_gauss_dim(cfg);
    } else if (cfg.command == "odd-realize") {
      cert = cmd_odd_realize(cfg);
    } else if (cfg.command == "odd-fiber") {
      cert = cmd_odd_fiber(cfg);
    } else if (cfg.command == "verify") {
      cert = cmd_verify(cfg);
    } else {
      throw std::invalid_argument("unknown command: " + cfg.command);
    }
    return emit(cert, cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace linc::cli
