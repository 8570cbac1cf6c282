#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "reinhardt/reinhardt.h"

#include <string>
#include <thread>
#include <vector>

namespace {

const char* kHartogs = R"({"n":2, "constraints":[{"alpha":["1","-1"],"c":"1"},{"alpha":["0","1"],"c":"1"}]})";

struct Spec {
  rh_spec* h = nullptr;
  explicit Spec(const char* text) { REQUIRE(rh_spec_parse(text, &h) == RH_OK); }
  ~Spec() { rh_spec_free(h); }
};

template <class F>
nlohmann::json take(F&& f) {
  char* out = nullptr;
  REQUIRE(f(&out) == RH_OK);
  REQUIRE(out != nullptr);
  auto j = nlohmann::json::parse(out);
  rh_string_free(out);
  return j;
}

}  // namespace

TEST_CASE("parse, dim, source and containment") {
  Spec s(kHartogs);
  CHECK(rh_spec_dim(s.h) == 2);
  char* src = nullptr;
  REQUIRE(rh_spec_source(s.h, &src) == RH_OK);
  CHECK(std::string(src) == kHartogs);
  rh_string_free(src);
  int inside = -1;
  REQUIRE(rh_contains(s.h, "1/2,3/4", &inside) == RH_OK);
  CHECK(inside == 1);
  REQUIRE(rh_contains(s.h, "3/4,1/2", &inside) == RH_OK);
  CHECK(inside == 0);
  CHECK(rh_contains(s.h, "1/2", &inside) == RH_INVALID_INPUT);
}

TEST_CASE("error codes") {
  rh_spec* h = reinterpret_cast<rh_spec*>(1);
  CHECK(rh_spec_parse("{not json", &h) == RH_INVALID_INPUT);
  CHECK(h == nullptr);
  CHECK(std::string(rh_last_error()).size() > 0);
  CHECK(rh_spec_parse(nullptr, &h) == RH_INVALID_INPUT);

  CHECK(rh_spec_parse(R"({"n":1, "constraints":[{"alpha":["1"],"c":"1"},{"alpha":["-1"],"c":"1/2"}]})", &h) ==
        RH_EMPTY_DOMAIN);
  CHECK(h == nullptr);

  Spec s(kHartogs);
  char* out = reinterpret_cast<char*>(1);
  CHECK(rh_norm_exact(s.h, "0,0,0", "1", nullptr, &out) == RH_INVALID_INPUT);
  CHECK(out == nullptr);
  CHECK(rh_norm_exact(s.h, "0,0", "1/2", nullptr, &out) == RH_INVALID_INPUT);
  CHECK(rh_spectrum(s.h, "bogus", 2, &out) == RH_INVALID_INPUT);
  CHECK(rh_set_precision_cap(8) == RH_INVALID_INPUT);
}

TEST_CASE("reports through the C API") {
  Spec s(kHartogs);
  auto c = take([&](char** o) { return rh_classify(s.h, o); });
  CHECK(c["verdicts"]["Ainf"]["verdict"] == "no");
  CHECK(c["verdicts"]["Ainf"]["evidence"]["failing_epsilon"] == nlohmann::json::array({1, 1}));

  auto n = take([&](char** o) { return rh_norm_exact(s.h, "0,0", "1", nullptr, o); });
  CHECK(n["value"]["exact"]["symbolic"] == "pi^2/2");

  auto w = take([&](char** o) { return rh_witness(s.h, 0, "3,3/2", 1, 1, "1,2,3", o); });
  CHECK(w["N"] == 6);
  CHECK(w["valid"] == true);

  auto sp = take([&](char** o) { return rh_spectrum(s.h, "hinf", 1, o); });
  CHECK(sp["spectrum"].size() == 5);

  auto f = take([&](char** o) { return rh_find_integrable(s.h, o); });
  CHECK(f.is_object());
}

TEST_CASE("Monte Carlo is independent of the thread count") {
  Spec s(kHartogs);
  auto a = take([&](char** o) { return rh_norm_mc(s.h, "1,0", "2", 50000, 3, 1, o); });
  auto b = take([&](char** o) { return rh_norm_mc(s.h, "1,0", "2", 50000, 3, 4, o); });
  CHECK(a == b);
}

TEST_CASE("last error is per thread") {
  char* out = nullptr;
  Spec s(kHartogs);
  CHECK(rh_sup_norm(s.h, "1", &out) == RH_INVALID_INPUT);
  const std::string mine = rh_last_error();
  std::string other = "unset";
  std::thread t([&] { other = rh_last_error(); });
  t.join();
  CHECK(!mine.empty());
  CHECK(other.empty());
}
