#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "reinhardt/reinhardt.h"

using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string spec_path;
  bool json = false;
  bool echo = false;
  std::string nu;
  std::string p = "1";
  bool exact = false;
  bool mc = false;
  uint64_t samples = 1000000;
  std::optional<uint64_t> seed;
  unsigned threads = 0;
  std::string rows;
  long k = 0;
  std::string exterior;
  size_t j0 = 1;
  bool verify = false;
  std::string p_list = "1,2,3";
  std::string space = "hinf";
  long box = 3;
};

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void raise(rh_status s) { throw CliError{static_cast<int>(s), rh_last_error()}; }

// Runs one C API call that returns a malloc'd string.
template <class F>
std::string call(F&& f) {
  char* out = nullptr;
  const rh_status s = f(&out);
  if (s != RH_OK) raise(s);
  std::string text(out);
  rh_string_free(out);
  return text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{1, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const Json& arr) {
  std::string out = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ",";
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out + ")";
}

void print_value(const Json& v) {
  const std::string kind = v["kind"];
  if (kind == "exact") {
    std::printf("%s  in %s\n", v["exact"]["symbolic"].get<std::string>().c_str(),
                v["exact"]["display"].get<std::string>().c_str());
  } else if (kind == "estimate") {
    std::printf("%.10g +- %.3g  (%llu samples, %llu accepted, seed %llu)\n", v["estimate"].get<double>(),
                v["stderr"].get<double>(), static_cast<unsigned long long>(v["samples"].get<uint64_t>()),
                static_cast<unsigned long long>(v["accepted"].get<uint64_t>()),
                static_cast<unsigned long long>(v["seed"].get<uint64_t>()));
  } else {
    std::printf("%s\n", kind.c_str());
  }
}

void print_classify(const Json& r) {
  const auto& f = r["flags"];
  std::printf("n = %d  bounded: %s  finite volume: %s  proper subset: %s  fat: by representation\n",
              r["n"].get<int>(), f["bounded"].get<bool>() ? "yes" : "no", f["finite_volume"].get<bool>() ? "yes" : "no",
              f["proper_subset"].get<bool>() ? "yes" : "no");
  const auto& lin = r["lineality"];
  std::printf("E(log G): dim %d, %s", lin["dim"].get<int>(), lin["rational_type"].get<bool>() ? "rational type" : "not rational type");
  for (const auto& b : lin["basis"]) std::printf("  %s", join(b).c_str());
  std::printf("\n");
  if (!r["product_split"].is_null())
    std::printf("product split: m = %d, bounded coords %s, free coords %s\n", r["product_split"]["m"].get<int>(),
                join(r["product_split"]["bounded_coords"]).c_str(), join(r["product_split"]["free_coords"]).c_str());
  std::printf("\n");
  for (const auto& [name, v] : r["verdicts"].items()) {
    std::printf("%-12s %-15s %s\n", name.c_str(), v["verdict"].get<std::string>().c_str(),
                v["criterion"].get<std::string>().c_str());
    const auto& ev = v["evidence"];
    if (ev.contains("failing_epsilon"))
      std::printf("%-28s failing eps %s, ray %s, constraint %d\n", "", join(ev["failing_epsilon"]).c_str(),
                  join(ev["ray"]).c_str(), ev["negative_constraint"].get<int>());
    if (ev.contains("lineality_vector")) std::printf("%-28s lineality vector %s\n", "", join(ev["lineality_vector"]).c_str());
    if (ev.contains("irrational_vector")) std::printf("%-28s irrational direction %s\n", "", join(ev["irrational_vector"]).c_str());
  }
  if (!r["statements"].empty()) std::printf("\n");
  for (const auto& s : r["statements"]) std::printf("- %s\n", s.get<std::string>().c_str());
}

void print_witness(const Json& r) {
  std::printf("f_N = w^(N alpha) / (w^alpha_j0 - d),  w^alpha_j = z^alpha_j / c_j\n");
  std::printf("N = %lld  (N0 = %s in [%s, %s])\n", static_cast<long long>(r["N"].get<long>()),
              r["N0"].get<std::string>().c_str(), r["N0_interval"][0].get<std::string>().c_str(),
              r["N0_interval"][1].get<std::string>().c_str());
  std::printf("alpha = %s  j0 = %d  d = %s\n", join(r["alpha"]).c_str(), r["j0"].get<int>(), r["d"].get<std::string>().c_str());
  if (!r.contains("checks")) return;
  for (const auto& c : r["checks"]) {
    std::string what = c["kind"].get<std::string>() + " sigma " + join(c["sigma"]);
    if (c.contains("p")) what += " p " + c["p"].get<std::string>();
    if (c.contains("coord")) what += " coord " + std::to_string(c["coord"].get<int>());
    const std::string detail = c.contains("norm") ? c["norm"].get<std::string>() : c["detail"].get<std::string>();
    std::printf("  %-4s %-34s %s\n", c["ok"].get<bool>() ? "ok" : "FAIL", what.c_str(), detail.c_str());
  }
  const auto& tb = r["tail_bound"];
  std::printf("tail bound (P + Q mu)^R with P=%d Q=%d R=%d, spot check %s; derivative bound %.6g\n", tb["P"].get<int>(),
              tb["Q"].get<int>(), tb["R"].get<int>(), tb["spot_check"].get<bool>() ? "ok" : "FAIL",
              r["derivative_bound"].get<double>());
  std::printf("certificate: %s\n", r["valid"].get<bool>() ? "valid" : "invalid");
}

void print_spectrum(const Json& r) {
  std::printf("%s spectrum in [-%ld, %ld]^n: %zu monomials\n", r["space"].get<std::string>().c_str(), r["box"].get<long>(),
              r["box"].get<long>(), r["spectrum"].size());
  for (const auto& nu : r["spectrum"]) std::printf("  %s\n", join(nu).c_str());
  std::printf("orthogonal to E(log G): %s\n", r["orthogonality"]["pass"].get<bool>() ? "yes" : "no");
}

int run(const std::string& command, const Options& o) {
  const std::string text = read_file(o.spec_path);
  rh_spec* raw = nullptr;
  if (const rh_status s = rh_spec_parse(text.c_str(), &raw); s != RH_OK) raise(s);
  std::unique_ptr<rh_spec, decltype(&rh_spec_free)> spec(raw, rh_spec_free);
  if (o.echo) {
    std::fputs(call([&](char** out) { return rh_spec_source(spec.get(), out); }).c_str(), stdout);
    return 0;
  }
  if (o.mc && !o.seed) throw CliError{1, "--mc needs an explicit --seed"};
  std::string doc;
  if (command == "classify") {
    doc = call([&](char** out) { return rh_classify(spec.get(), out); });
  } else if (command == "norm") {
    if (o.mc == o.exact) throw CliError{1, "norm needs exactly one of --exact and --mc"};
    doc = o.mc ? call([&](char** out) { return rh_norm_mc(spec.get(), o.nu.c_str(), o.p.c_str(), o.samples, *o.seed, o.threads, out); })
               : call([&](char** out) { return rh_norm_exact(spec.get(), o.nu.c_str(), o.p.c_str(), o.rows.empty() ? nullptr : o.rows.c_str(), out); });
  } else if (command == "sup") {
    doc = call([&](char** out) { return rh_sup_norm(spec.get(), o.nu.c_str(), out); });
  } else if (command == "volume") {
    doc = call([&](char** out) { return rh_volume(spec.get(), o.mc ? 1 : 0, o.samples, o.seed.value_or(0), out); });
  } else if (command == "witness") {
    doc = call([&](char** out) { return rh_witness(spec.get(), o.k, o.exterior.c_str(), o.j0, o.verify ? 1 : 0, o.p_list.c_str(), out); });
  } else if (command == "spectrum") {
    doc = call([&](char** out) { return rh_spectrum(spec.get(), o.space.c_str(), o.box, out); });
  } else if (command == "member") {
    doc = call([&](char** out) { return rh_monomial_in_space(spec.get(), o.nu.c_str(), o.space.c_str(), out); });
  }
  if (o.json) {
    std::fputs(doc.c_str(), stdout);
    return 0;
  }
  const Json r = Json::parse(doc);
  if (command == "classify") {
    print_classify(r);
  } else if (command == "norm" || command == "sup") {
    std::printf("%s of z^%s%s: ", command == "sup" ? "sup |z^nu|" : "||z^nu||_p^p", join(r["nu"]).c_str(),
                r.contains("p") ? (" with p = " + r["p"].get<std::string>()).c_str() : "");
    print_value(r["value"]);
  } else if (command == "volume") {
    std::printf("volume: ");
    if (r["value"].is_null())
      std::printf("finite; %s\n", r["note"].get<std::string>().c_str());
    else
      print_value(r["value"]);
  } else if (command == "witness") {
    print_witness(r);
  } else if (command == "spectrum") {
    print_spectrum(r);
  } else if (command == "member") {
    std::printf("%s: %s (%s)\n", r["space"].get<std::string>().c_str(), r["verdict"].get<std::string>().c_str(),
                r["criterion"].get<std::string>().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domains of holomorphy for Reinhardt domains given by monomial constraints"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_path, "JSON spec file")->required();
    sub->add_flag("--json", o.json, "emit one JSON document");
    sub->add_flag("--echo-spec", o.echo, "print the spec file unchanged and exit");
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_flag("--mc", o.mc, "Monte-Carlo estimate");
    sub->add_option("--samples", o.samples, "sample count")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "RNG seed (required with --mc)");
    sub->add_option("--threads", o.threads, "worker threads, 0 = all cores");
  };

  auto* classify = app.add_subcommand("classify", "per-space domain-of-holomorphy verdicts");
  common(classify);

  auto* norm = app.add_subcommand("norm", "L^p norm of a monomial, ||z^nu||_p^p");
  common(norm);
  norm->add_option("--nu", o.nu, "integer exponent, comma separated")->required();
  norm->add_option("--p", o.p, "rational p >= 1");
  norm->add_flag("--exact", o.exact, "closed form on a simplicial domain");
  norm->add_option("--rows", o.rows, "1-based constraints forming the simplicial frame");
  sampling(norm);

  auto* sup = app.add_subcommand("sup", "sup norm of a monomial");
  common(sup);
  sup->add_option("--nu", o.nu, "integer exponent, comma separated")->required();

  auto* volume = app.add_subcommand("volume", "Lebesgue volume of G");
  common(volume);
  sampling(volume);

  auto* witness = app.add_subcommand("witness", "singular witness function f_N on a simplicial domain");
  common(witness);
  witness->add_option("--k", o.k, "derivative order k >= 0");
  witness->add_option("--exterior", o.exterior, "radii b of a point with |b^alpha_j0| > c_j0")->required();
  witness->add_option("--j0", o.j0, "1-based constraint index");
  witness->add_flag("--verify", o.verify, "verify membership of f_N");
  witness->add_option("--p-list", o.p_list, "exponents p checked by --verify");

  auto* spectrum = app.add_subcommand("spectrum", "monomials of a function space in a box");
  common(spectrum);
  spectrum->add_option("--space", o.space, "hinf, l2, lp:P, ldiamond:K, ldiamond-ak:K, ak:K, ainf, hinf-closure, hinfk:K");
  spectrum->add_option("--box", o.box, "box radius R")->check(CLI::NonNegativeNumber);

  auto* member = app.add_subcommand("member", "whether one monomial lies in a function space");
  common(member);
  member->add_option("--nu", o.nu, "integer exponent, comma separated")->required();
  member->add_option("--space", o.space, "function space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  }
}
