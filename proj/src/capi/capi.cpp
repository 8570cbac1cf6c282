#include <cstdlib>
#include <cstring>
#include <string>

#include "reinhardt/reinhardt.h"
#include "reinhardt/report.hpp"

using namespace reinhardt;

struct rh_spec {
  std::string source;
  DomainSpec spec;
};

namespace {

thread_local std::string last_error;

rh_status status_of(ErrorCode c) { return static_cast<rh_status>(static_cast<int>(c)); }

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
rh_status guarded(char** out, F&& f) {
  if (out) *out = nullptr;
  try {
    last_error.clear();
    const std::string text = f();
    if (out) *out = dup(text);
    return RH_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return RH_INTERNAL;
}

rh_status null_arg() {
  last_error = "null argument";
  return RH_INVALID_INPUT;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* rh_version(void) { return "0.1.0"; }

const char* rh_last_error(void) { return last_error.c_str(); }

void rh_string_free(char* s) { std::free(s); }

rh_status rh_set_precision_cap(unsigned bits) {
  return guarded(nullptr, [&] {
    set_precision_cap(bits);
    return std::string();
  });
}

rh_status rh_spec_parse(const char* text, rh_spec** out) {
  if (!text || !out) return null_arg();
  *out = nullptr;
  return guarded(nullptr, [&] {
    *out = new rh_spec{text, parse_spec(text)};
    return std::string();
  });
}

void rh_spec_free(rh_spec* spec) { delete spec; }

size_t rh_spec_dim(const rh_spec* spec) { return spec ? spec->spec.dim() : 0; }

rh_status rh_spec_source(const rh_spec* spec, char** out) {
  if (!spec) return null_arg();
  return guarded(out, [&] { return spec->source; });
}

rh_status rh_spec_canonical(const rh_spec* spec, char** out) {
  if (!spec) return null_arg();
  return guarded(out, [&] { return spec_to_json(spec->spec); });
}

rh_status rh_contains(const rh_spec* spec, const char* radii, int* inside) {
  if (!spec || !radii || !inside) return null_arg();
  return guarded(nullptr, [&] {
    const auto r = parse_vector(radii, spec->spec.dim());
    *inside = contains(spec->spec, RadialPoint{r}) ? 1 : 0;
    return std::string();
  });
}

rh_status rh_classify(const rh_spec* spec, char** out) {
  if (!spec || !out) return null_arg();
  return guarded(out, [&] { return dump(classify_report(spec->spec)); });
}

rh_status rh_norm_exact(const rh_spec* spec, const char* nu, const char* p, const char* rows, char** out) {
  if (!spec || !nu || !p || !out) return null_arg();
  return guarded(out, [&] {
    const auto& s = spec->spec;
    const auto v = parse_vector(nu, s.dim());
    const mpq_class pq = Scalar::parse_rational(p).rational_part();
    if (pq < 1) fail(ErrorCode::invalid_input, "p must lie in [1, inf)");
    if (!is_integer_vector(v)) fail(ErrorCode::invalid_input, "nu must be an integer vector");
    std::vector<size_t> use;
    if (rows)
      for (const auto& r : parse_rational_list(rows)) {
        if (r.get_den() != 1 || r < 1) fail(ErrorCode::invalid_input, "rows must be positive integers");
        use.push_back(r.get_num().get_ui() - 1);
      }
    if (!monomial_holomorphic(s, v)) fail(ErrorCode::invalid_input, "monomial is not holomorphic on G");
    const auto frame = SimplicialFrame::from_spec(s, use);
    Json j = norm_report(lp_norm_exact_simplicial(frame, v, pq), v, pq);
    if (rows) {
      Json r = Json::array();
      for (size_t i : use) r.push_back(i + 1);
      j["frame_rows"] = r;
    }
    return dump(j);
  });
}

rh_status rh_norm_mc(const rh_spec* spec, const char* nu, const char* p, uint64_t samples, uint64_t seed,
                     unsigned threads, char** out) {
  if (!spec || !nu || !p || !out) return null_arg();
  return guarded(out, [&] {
    const auto& s = spec->spec;
    const auto v = parse_vector(nu, s.dim());
    if (!is_integer_vector(v)) fail(ErrorCode::invalid_input, "nu must be an integer vector");
    const mpq_class pq = Scalar::parse_rational(p).rational_part();
    if (pq < 1) fail(ErrorCode::invalid_input, "p must lie in [1, inf)");
    if (samples == 0) fail(ErrorCode::invalid_input, "samples must be positive");
    return dump(norm_report(lp_norm_monte_carlo(s, v, pq, {samples, seed, threads}), v, pq));
  });
}

rh_status rh_sup_norm(const rh_spec* spec, const char* nu, char** out) {
  if (!spec || !nu || !out) return null_arg();
  return guarded(out, [&] {
    const auto v = parse_vector(nu, spec->spec.dim());
    if (!is_integer_vector(v)) fail(ErrorCode::invalid_input, "nu must be an integer vector");
    return dump(sup_report(sup_norm_monomial(spec->spec, v), v));
  });
}

rh_status rh_volume(const rh_spec* spec, int use_mc, uint64_t samples, uint64_t seed, char** out) {
  if (!spec || !out) return null_arg();
  return guarded(out, [&] {
    std::optional<MonteCarloOptions> mc;
    if (use_mc) {
      if (samples == 0) fail(ErrorCode::invalid_input, "samples must be positive");
      mc = MonteCarloOptions{samples, seed, 0};
    }
    return dump(volume_report(spec->spec, mc));
  });
}

rh_status rh_find_integrable(const rh_spec* spec, char** out) {
  if (!spec || !out) return null_arg();
  return guarded(out, [&] { return dump(integrable_report(find_integrable_monomial(spec->spec))); });
}

rh_status rh_witness(const rh_spec* spec, long k, const char* exterior, size_t j0, int verify, const char* p_list,
                     char** out) {
  if (!spec || !exterior || !out) return null_arg();
  return guarded(out, [&] {
    const auto& s = spec->spec;
    if (k < 0) fail(ErrorCode::invalid_input, "k must be non-negative");
    if (j0 < 1 || j0 > s.dim()) fail(ErrorCode::invalid_input, "j0 must lie in 1..n");
    WitnessSpec ws{SimplicialFrame::from_spec(s), k, RadialPoint{parse_vector(exterior, s.dim())}, j0 - 1};
    const auto w = build_witness(ws);
    std::vector<mpq_class> ps;
    std::optional<WitnessCertificate> cert;
    if (verify) {
      ps = parse_rational_list(p_list ? p_list : "1,2,3");
      for (const auto& p : ps)
        if (p < 1) fail(ErrorCode::invalid_input, "p must lie in [1, inf)");
      cert = verify_witness_membership(w, k, ps);
    }
    return dump(witness_report(w, cert, ps));
  });
}

rh_status rh_spectrum(const rh_spec* spec, const char* space, long box, char** out) {
  if (!spec || !space || !out) return null_arg();
  return guarded(out, [&] { return dump(spectrum_report(spec->spec, FunctionSpace::parse(space), box)); });
}

rh_status rh_monomial_in_space(const rh_spec* spec, const char* nu, const char* space, char** out) {
  if (!spec || !nu || !space || !out) return null_arg();
  return guarded(out, [&] {
    const auto v = parse_int_vector(nu, spec->spec.dim());
    const auto fs = FunctionSpace::parse(space);
    const auto m = monomial_in_space(spec->spec, v, fs);
    Json j{{"command", "member"}, {"nu", int_vector_json(v)}, {"space", fs.to_string()}, {"verdict", to_string(m.verdict)}, {"criterion", m.criterion}};
    if (!m.sigma.empty()) j["sigma"] = m.sigma;
    if (!m.axis_set.empty()) j["axis_set"] = m.axis_set;
    return dump(j);
  });
}

}  // extern "C"
