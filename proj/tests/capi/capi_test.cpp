//------------------------------------------------------------------------------
//
//   Copyright 2026 The tidlab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------


// Exercises the shared library through tidlab.h only.

#include "tidlab/tidlab.h"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct ReportDeleter
{
  void operator()(tidlab_report *r) const
  {
    tidlab_report_free(r);
  }
};
struct ScenarioDeleter
{
  void operator()(tidlab_scenario *s) const
  {
    tidlab_scenario_free(s);
  }
};
using ReportPtr   = std::unique_ptr<tidlab_report, ReportDeleter>;
using ScenarioPtr = std::unique_ptr<tidlab_scenario, ScenarioDeleter>;

ScenarioPtr builtin(char const *kind, size_t n, char const *ratio)
{
  tidlab_scenario *s = nullptr;
  REQUIRE(tidlab_scenario_builtin(kind, n, ratio, &s) == TIDLAB_OK);
  return ScenarioPtr{s};
}

ReportPtr run(tidlab_scenario const *s, char const *seed)
{
  tidlab_report *r = nullptr;
  REQUIRE(tidlab_run(s, seed, &r) == TIDLAB_OK);
  return ReportPtr{r};
}

fs::path scratch_dir(std::string const &name)
{
  auto dir = fs::temp_directory_path() / ("tidlab_capi_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(fs::path const &p)
{
  std::ifstream in{p, std::ios::binary};
  return {std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}

void spit(fs::path const &p, std::string const &data)
{
  std::ofstream out{p, std::ios::binary};
  out << data;
}

}  // namespace

TEST_CASE("status names and version")
{
  CHECK(std::string{tidlab_version()} == "0.1.0");
  CHECK(std::string{tidlab_status_name(TIDLAB_OK)} == "ok");
  CHECK(std::string{tidlab_status_name(TIDLAB_ERR_INTEGRITY)} == "integrity");
}

TEST_CASE("null and bad arguments are rejected with a message")
{
  tidlab_scenario *s = nullptr;
  CHECK(tidlab_scenario_load(nullptr, &s) == TIDLAB_ERR_ARGUMENT);
  CHECK(std::string{tidlab_last_error()} == "null argument");
  CHECK(tidlab_scenario_builtin("weird", 4, "1/2", &s) == TIDLAB_ERR_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(tidlab_scenario_builtin("happy", 4, "3/2", &s) == TIDLAB_ERR_PARSE);
  CHECK(tidlab_scenario_builtin("happy", 4, "1/0", &s) == TIDLAB_ERR_PARSE);
  CHECK(tidlab_scenario_load("/nonexistent/x.scenario", &s) == TIDLAB_ERR_IO);
  CHECK(std::string{tidlab_last_error()}.size() > 0);

  std::string const bad = "name: x\nn: 4\nbogus_key: 1\n";
  CHECK(tidlab_scenario_parse(bad.data(), bad.size(), &s) == TIDLAB_ERR_PARSE);
  CHECK(s == nullptr);

  // freeing null is fine
  tidlab_scenario_free(nullptr);
  tidlab_report_free(nullptr);
  tidlab_sweep_free(nullptr);
  tidlab_bytes_free(nullptr);
}

TEST_CASE("happy run through the C API")
{
  auto s = builtin("happy", 8, "1/2");
  CHECK(tidlab_scenario_members(s.get()) == 8);
  auto r = run(s.get(), "capi-happy");
  CHECK(tidlab_report_passed(r.get()) == 1);
  CHECK(tidlab_report_first_violation(r.get()) == nullptr);
  CHECK(std::string{tidlab_report_outcome(r.get())} == "completed");
  CHECK(tidlab_report_threshold(r.get()) == 3);
  CHECK(tidlab_report_event_count(r.get(), "Registered") == 8);
  CHECK(tidlab_report_event_count(r.get(), "MskAccepted") == 1);
  CHECK(tidlab_report_event_count(r.get(), "MemberDisqualified") == 0);

  size_t const count = tidlab_report_invariant_count(r.get());
  REQUIRE(count > 0);
  for (size_t i = 0; i < count; ++i)
  {
    char const *name   = nullptr;
    int         passed = 0;
    REQUIRE(tidlab_report_invariant(r.get(), i, &name, &passed, nullptr) == TIDLAB_OK);
    INFO(name);
    CHECK(passed == 1);
  }
  CHECK(tidlab_report_invariant(r.get(), count, nullptr, nullptr, nullptr) ==
        TIDLAB_ERR_ARGUMENT);

  std::string const json = tidlab_report_json(r.get());
  CHECK(json.find("\"outcome\"") != std::string::npos);
}

TEST_CASE("sad run disqualifies the cheater")
{
  auto s = builtin("sad", 8, "2/3");
  auto r = run(s.get(), "capi-sad");
  CHECK(tidlab_report_passed(r.get()) == 1);
  CHECK(tidlab_report_event_count(r.get(), "MemberDisqualified") == 1);
  CHECK(tidlab_report_event_count(r.get(), "DepositSlashed") == 1);
}

TEST_CASE("scenario file load and report write")
{
  tidlab_scenario *raw = nullptr;
  REQUIRE(tidlab_scenario_load(TIDLAB_SCENARIO_DIR "/abort_4.scenario", &raw) == TIDLAB_OK);
  ScenarioPtr s{raw};
  CHECK(std::string{tidlab_scenario_name(s.get())} == "abort_4");
  auto r = run(s.get(), "capi-abort");
  CHECK(tidlab_report_passed(r.get()) == 1);
  CHECK(std::string{tidlab_report_outcome(r.get())} == "aborted");

  auto dir = scratch_dir("write");
  REQUIRE(tidlab_report_write(r.get(), dir.c_str()) == TIDLAB_OK);
  CHECK(fs::exists(dir / "log.jsonl"));
  CHECK(fs::exists(dir / "meter.csv"));
  CHECK(fs::exists(dir / "report.json"));
  CHECK(!fs::exists(dir / "mpk.key"));
  fs::remove_all(dir);
}

TEST_CASE("sweep over two points")
{
  size_t const      ns[]     = {4, 8};
  char const *const ratios[] = {"1/2", "2/3"};
  tidlab_sweep     *sweep    = nullptr;
  REQUIRE(tidlab_sweep_run(ns, ratios, 2, "capi-sweep", &sweep) == TIDLAB_OK);
  CHECK(tidlab_sweep_passed(sweep) == 1);
  CHECK(tidlab_sweep_failure_count(sweep) == 0);
  CHECK(tidlab_sweep_failure(sweep, 0) == nullptr);
  CHECK(tidlab_sweep_dispute_constant(sweep) == 4);
  std::string const csv = tidlab_sweep_csv(sweep);
  CHECK(csv.rfind("function,n,ratio,t,", 0) == 0);
  CHECK(csv.find("submit_dispute,8,2/3,5,") != std::string::npos);
  tidlab_sweep_free(sweep);

  char const *const bad[] = {"1/2", "x"};
  sweep                   = nullptr;
  CHECK(tidlab_sweep_run(ns, bad, 2, "capi-sweep", &sweep) == TIDLAB_ERR_PARSE);
  CHECK(sweep == nullptr);
}

TEST_CASE("bias demo")
{
  tidlab_report *raw = nullptr;
  REQUIRE(tidlab_bias_demo(8, "0x0badc0de", "capi-bias", &raw) == TIDLAB_OK);
  ReportPtr r{raw};
  CHECK(tidlab_report_passed(r.get()) == 1);

  raw = nullptr;
  REQUIRE(tidlab_bias_demo(4, nullptr, "capi-bias", &raw) == TIDLAB_OK);
  r.reset(raw);
  CHECK(tidlab_report_passed(r.get()) == 1);

  raw = nullptr;
  CHECK(tidlab_bias_demo(4, "zz", "capi-bias", &raw) == TIDLAB_ERR_PARSE);
  CHECK(raw == nullptr);
}

TEST_CASE("file encryption round trip under run keys")
{
  auto s = builtin("happy", 4, "1/2");
  auto r = run(s.get(), "capi-keys");
  REQUIRE(tidlab_report_passed(r.get()) == 1);
  auto dir = scratch_dir("crypt");
  REQUIRE(tidlab_report_write(r.get(), dir.c_str()) == TIDLAB_OK);

  auto const mpk = (dir / "mpk.key").string();
  auto const msk = (dir / "msk.key").string();
  auto const pt  = dir / "plain.bin";
  auto const ct  = dir / "plain.tidc";
  auto const out = dir / "plain.out";

  for (std::string const &body : {std::string{}, std::string{"x"}, std::string(5000, 'q')})
  {
    spit(pt, body);
    REQUIRE(tidlab_encrypt_file(mpk.c_str(), pt.c_str(), ct.c_str(), nullptr) == TIDLAB_OK);
    CHECK(fs::file_size(ct) == 160 + body.size());
    REQUIRE(tidlab_decrypt_file(msk.c_str(), ct.c_str(), out.c_str()) == TIDLAB_OK);
    CHECK(slurp(out) == body);
  }

  // seeded encryption is deterministic
  spit(pt, "abc");
  REQUIRE(tidlab_encrypt_file(mpk.c_str(), pt.c_str(), ct.c_str(), "s") == TIDLAB_OK);
  auto const first = slurp(ct);
  REQUIRE(tidlab_encrypt_file(mpk.c_str(), pt.c_str(), ct.c_str(), "s") == TIDLAB_OK);
  CHECK(slurp(ct) == first);

  // a flipped bit fails and writes nothing
  auto tampered = first;
  tampered.back() ^= 1;
  spit(ct, tampered);
  fs::remove(out);
  CHECK(tidlab_decrypt_file(msk.c_str(), ct.c_str(), out.c_str()) == TIDLAB_ERR_INTEGRITY);
  CHECK(!fs::exists(out));

  spit(ct, first.substr(0, 100));
  CHECK(tidlab_decrypt_file(msk.c_str(), ct.c_str(), out.c_str()) == TIDLAB_ERR_INTEGRITY);

  // key of another instance
  auto s2 = builtin("happy", 4, "1/2");
  auto r2 = run(s2.get(), "capi-other");
  auto dir2 = scratch_dir("crypt2");
  REQUIRE(tidlab_report_write(r2.get(), dir2.c_str()) == TIDLAB_OK);
  spit(ct, first);
  CHECK(tidlab_decrypt_file((dir2 / "msk.key").c_str(), ct.c_str(), out.c_str()) ==
        TIDLAB_ERR_INTEGRITY);

  // key file type confusion
  CHECK(tidlab_decrypt_file(mpk.c_str(), ct.c_str(), out.c_str()) == TIDLAB_ERR_PARSE);
  CHECK(tidlab_encrypt_file(mpk.c_str(), (dir / "missing").c_str(), ct.c_str(), nullptr) ==
        TIDLAB_ERR_IO);

  fs::remove_all(dir);
  fs::remove_all(dir2);
}

TEST_CASE("in-memory encryption")
{
  // generator as mpk, msk = 1
  std::string const g =
      "0000000000000000000000000000000000000000000000000000000000000001"
      "0000000000000000000000000000000000000000000000000000000000000002";
  std::string const one(63, '0');
  std::vector<uint8_t> const msg{1, 2, 3, 4, 5};

  uint8_t *ct     = nullptr;
  size_t   ct_len = 0;
  REQUIRE(tidlab_encrypt(g.c_str(), msg.data(), msg.size(), "m", &ct, &ct_len) == TIDLAB_OK);
  CHECK(ct_len == 165);

  uint8_t *pt     = nullptr;
  size_t   pt_len = 0;
  REQUIRE(tidlab_decrypt((one + "1").c_str(), ct, ct_len, &pt, &pt_len) == TIDLAB_OK);
  CHECK(std::vector<uint8_t>(pt, pt + pt_len) == msg);
  tidlab_bytes_free(pt);

  CHECK(tidlab_decrypt((one + "2").c_str(), ct, ct_len, &pt, &pt_len) == TIDLAB_ERR_INTEGRITY);
  CHECK(pt == nullptr);
  tidlab_bytes_free(ct);

  // (1, 3) is not on the curve
  std::string bad = g;
  bad.back()      = '3';
  CHECK(tidlab_encrypt(bad.c_str(), msg.data(), msg.size(), "m", &ct, &ct_len) ==
        TIDLAB_ERR_DECODE);
}
