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


#include "tidlab/tidlab.h"

#include "tidlab/elgamal.hpp"
#include "tidlab/error.hpp"
#include "tidlab/harness.hpp"
#include "tidlab/keyfile.hpp"
#include "tidlab/random.hpp"
#include "tidlab/scenario.hpp"

#include <openssl/rand.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <new>
#include <sstream>
#include <string>
#include <vector>

struct tidlab_scenario
{
  tidlab::Scenario scenario;
};

struct tidlab_report
{
  tidlab::RunReport        report;
  std::string              outcome;
  std::string              violation;
  bool                     has_violation{false};
  mutable std::string      json;  // rendered on first request
};

struct tidlab_sweep
{
  tidlab::SweepReport report;
  std::string         csv;
};

namespace {

thread_local std::string g_last_error;

tidlab_status fail(tidlab_status status, std::string message)
{
  g_last_error = std::move(message);
  return status;
}

tidlab_status status_for(tidlab::ErrorKind kind)
{
  using tidlab::ErrorKind;
  switch (kind)
  {
  case ErrorKind::Parse:
    return TIDLAB_ERR_PARSE;
  case ErrorKind::Io:
    return TIDLAB_ERR_IO;
  case ErrorKind::Integrity:
    return TIDLAB_ERR_INTEGRITY;
  case ErrorKind::Decode:
    return TIDLAB_ERR_DECODE;
  case ErrorKind::Domain:
  case ErrorKind::Aggregation:
  case ErrorKind::Reconstruction:
    return TIDLAB_ERR_ARGUMENT;
  case ErrorKind::Ledger:
  case ErrorKind::Invariant:
    break;
  }
  return TIDLAB_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
tidlab_status guarded(Fn &&fn) noexcept
{
  g_last_error.clear();
  try
  {
    fn();
    return TIDLAB_OK;
  }
  catch (tidlab::Error const &e)
  {
    return fail(status_for(e.kind()), e.what());
  }
  catch (std::filesystem::filesystem_error const &e)
  {
    return fail(TIDLAB_ERR_IO, e.what());
  }
  catch (std::bad_alloc const &)
  {
    return fail(TIDLAB_ERR_INTERNAL, "out of memory");
  }
  catch (std::exception const &e)
  {
    return fail(TIDLAB_ERR_INTERNAL, e.what());
  }
  catch (...)
  {
    return fail(TIDLAB_ERR_INTERNAL, "unknown exception");
  }
}

tidlab::Bytes read_file(char const *path)
{
  std::ifstream in{path, std::ios::binary};
  if (!in)
  {
    throw tidlab::Error{tidlab::ErrorKind::Io, std::string{"cannot open "} + path};
  }
  tidlab::Bytes data{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
  if (in.bad())
  {
    throw tidlab::Error{tidlab::ErrorKind::Io, std::string{"cannot read "} + path};
  }
  return data;
}

void write_file(char const *path, tidlab::Bytes const &data)
{
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  out.write(reinterpret_cast<char const *>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out)
  {
    throw tidlab::Error{tidlab::ErrorKind::Io, std::string{"cannot write "} + path};
  }
}

tidlab::Bytes encryption_seed(char const *seed)
{
  if (seed != nullptr)
  {
    return tidlab::Drbg{std::string_view{seed}}.fork("encrypt").next_bytes(32);
  }
  tidlab::Bytes fresh(32);
  if (RAND_bytes(fresh.data(), static_cast<int>(fresh.size())) != 1)
  {
    throw std::runtime_error{"system randomness unavailable"};
  }
  return fresh;
}

tidlab_report *wrap(tidlab::RunReport report)
{
  auto *out    = new tidlab_report{std::move(report), {}, {}, false, {}};
  out->outcome = std::string{tidlab::expectation_name(out->report.outcome)};
  if (auto v = out->report.first_violation())
  {
    out->violation     = v->name + ": " + v->detail;
    out->has_violation = true;
  }
  return out;
}

void export_bytes(tidlab::Bytes const &data, uint8_t **out, size_t *out_len)
{
  // malloc(0) may return null; always hand back a freeable pointer
  auto *buf = static_cast<uint8_t *>(std::malloc(data.empty() ? 1 : data.size()));
  if (buf == nullptr)
  {
    throw std::bad_alloc{};
  }
  if (!data.empty())
  {
    std::memcpy(buf, data.data(), data.size());
  }
  *out     = buf;
  *out_len = data.size();
}

}  // namespace

extern "C" {

const char *tidlab_version(void)
{
  return "0.1.0";
}

const char *tidlab_status_name(tidlab_status status)
{
  switch (status)
  {
  case TIDLAB_OK:
    return "ok";
  case TIDLAB_ERR_ARGUMENT:
    return "argument";
  case TIDLAB_ERR_PARSE:
    return "parse";
  case TIDLAB_ERR_IO:
    return "io";
  case TIDLAB_ERR_INTEGRITY:
    return "integrity";
  case TIDLAB_ERR_DECODE:
    return "decode";
  case TIDLAB_ERR_INTERNAL:
    return "internal";
  }
  return "unknown";
}

const char *tidlab_last_error(void)
{
  return g_last_error.c_str();
}

// --- scenarios ---------------------------------------------------------------

tidlab_status tidlab_scenario_load(const char *path, tidlab_scenario **out)
{
  if (path == nullptr || out == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] { *out = new tidlab_scenario{tidlab::load_scenario(path)}; });
}

tidlab_status tidlab_scenario_parse(const char *text, size_t len, tidlab_scenario **out)
{
  if ((text == nullptr && len != 0) || out == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    *out = new tidlab_scenario{tidlab::parse_scenario(std::string_view{text, len})};
  });
}

tidlab_status tidlab_scenario_builtin(const char *kind, size_t n, const char *ratio,
                                      tidlab_scenario **out)
{
  if (kind == nullptr || ratio == nullptr || out == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  *out = nullptr;
  std::string_view const k{kind};
  if (k != "happy" && k != "sad")
  {
    return fail(TIDLAB_ERR_ARGUMENT, "unknown scenario kind: " + std::string{k});
  }
  return guarded([&] {
    auto const r = tidlab::ThresholdRatio::parse(ratio);
    auto s       = k == "happy" ? tidlab::happy_scenario(n, r) : tidlab::sad_scenario(n, r);
    s.validate();
    *out = new tidlab_scenario{std::move(s)};
  });
}

const char *tidlab_scenario_name(const tidlab_scenario *scenario)
{
  return scenario != nullptr ? scenario->scenario.name.c_str() : "";
}

size_t tidlab_scenario_members(const tidlab_scenario *scenario)
{
  return scenario != nullptr ? scenario->scenario.n : 0;
}

void tidlab_scenario_free(tidlab_scenario *scenario)
{
  delete scenario;
}

// --- runs --------------------------------------------------------------------

tidlab_status tidlab_run(const tidlab_scenario *scenario, const char *seed, tidlab_report **out)
{
  if (scenario == nullptr || seed == nullptr || out == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] { *out = wrap(tidlab::run_scenario(scenario->scenario, seed)); });
}

tidlab_status tidlab_bias_demo(size_t n, const char *bias_hex, const char *seed,
                               tidlab_report **out)
{
  if (seed == nullptr || out == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    tidlab::Scalar b;
    if (bias_hex != nullptr)
    {
      std::string hex{bias_hex};
      if (hex.starts_with("0x"))
      {
        hex.erase(0, 2);
      }
      auto const is_hex = [](unsigned char c) { return std::isxdigit(c) != 0; };
      if (hex.empty() || hex.size() > 64 || !std::all_of(hex.begin(), hex.end(), is_hex))
      {
        throw tidlab::Error{tidlab::ErrorKind::Parse, "bias must be 1 to 64 hex digits"};
      }
      b = tidlab::Scalar::from_hex(std::string(64 - hex.size(), '0') + hex);
    }
    else
    {
      b = tidlab::Drbg{std::string_view{seed}}.fork("bias").next_nonzero_scalar();
    }
    *out = wrap(tidlab::biasing_demo(n, b, seed));
  });
}

int tidlab_report_passed(const tidlab_report *report)
{
  return report != nullptr && report->report.passed() ? 1 : 0;
}

const char *tidlab_report_first_violation(const tidlab_report *report)
{
  return report != nullptr && report->has_violation ? report->violation.c_str() : nullptr;
}

const char *tidlab_report_outcome(const tidlab_report *report)
{
  return report != nullptr ? report->outcome.c_str() : "";
}

size_t tidlab_report_threshold(const tidlab_report *report)
{
  return report != nullptr ? report->report.t.value_or(0) : 0;
}

size_t tidlab_report_invariant_count(const tidlab_report *report)
{
  return report != nullptr ? report->report.invariants.size() : 0;
}

tidlab_status tidlab_report_invariant(const tidlab_report *report, size_t index,
                                      const char **name, int *passed, const char **detail)
{
  if (report == nullptr || index >= report->report.invariants.size())
  {
    return fail(TIDLAB_ERR_ARGUMENT, "invariant index out of range");
  }
  auto const &v = report->report.invariants[index];
  if (name != nullptr)
  {
    *name = v.name.c_str();
  }
  if (passed != nullptr)
  {
    *passed = v.passed ? 1 : 0;
  }
  if (detail != nullptr)
  {
    *detail = v.detail.c_str();
  }
  return TIDLAB_OK;
}

size_t tidlab_report_event_count(const tidlab_report *report, const char *event)
{
  if (report == nullptr || event == nullptr)
  {
    return 0;
  }
  std::string_view const want{event};
  size_t count = 0;
  for (auto const &entry : report->report.log)
  {
    for (auto const &ev : entry.outcome.events)
    {
      count += tidlab::event_name(ev) == want ? 1 : 0;
    }
  }
  return count;
}

const char *tidlab_report_json(const tidlab_report *report)
{
  if (report == nullptr)
  {
    return "";
  }
  if (report->json.empty())
  {
    try
    {
      report->json = tidlab::report_json(report->report);
    }
    catch (std::exception const &e)
    {
      g_last_error = e.what();
      return "";
    }
  }
  return report->json.c_str();
}

tidlab_status tidlab_report_write(const tidlab_report *report, const char *dir)
{
  if (report == nullptr || dir == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] { report->report.write(dir); });
}

void tidlab_report_free(tidlab_report *report)
{
  delete report;
}

// --- sweeps ------------------------------------------------------------------

tidlab_status tidlab_sweep_run(const size_t *ns, const char *const *ratios, size_t count,
                               const char *seed, tidlab_sweep **out)
{
  if ((count != 0 && (ns == nullptr || ratios == nullptr)) || seed == nullptr || out == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::vector<tidlab::SweepPoint> points;
    points.reserve(count);
    for (size_t i = 0; i < count; ++i)
    {
      if (ratios[i] == nullptr)
      {
        throw tidlab::Error{tidlab::ErrorKind::Parse, "null ratio"};
      }
      points.push_back({ns[i], tidlab::ThresholdRatio::parse(ratios[i])});
    }
    auto report = tidlab::cost_sweep(points, seed);
    std::ostringstream csv;
    report.write_csv(csv);
    *out = new tidlab_sweep{std::move(report), csv.str()};
  });
}

int tidlab_sweep_passed(const tidlab_sweep *sweep)
{
  return sweep != nullptr && sweep->report.passed() ? 1 : 0;
}

size_t tidlab_sweep_failure_count(const tidlab_sweep *sweep)
{
  return sweep != nullptr ? sweep->report.failures.size() : 0;
}

const char *tidlab_sweep_failure(const tidlab_sweep *sweep, size_t index)
{
  if (sweep == nullptr || index >= sweep->report.failures.size())
  {
    return nullptr;
  }
  return sweep->report.failures[index].c_str();
}

int64_t tidlab_sweep_dispute_constant(const tidlab_sweep *sweep)
{
  if (sweep == nullptr || !sweep->report.dispute_constant)
  {
    return -1;
  }
  return static_cast<int64_t>(*sweep->report.dispute_constant);
}

const char *tidlab_sweep_csv(const tidlab_sweep *sweep)
{
  return sweep != nullptr ? sweep->csv.c_str() : "";
}

void tidlab_sweep_free(tidlab_sweep *sweep)
{
  delete sweep;
}

// --- submissions -------------------------------------------------------------

tidlab_status tidlab_encrypt_file(const char *mpk_path, const char *in_path,
                                  const char *out_path, const char *seed)
{
  if (mpk_path == nullptr || in_path == nullptr || out_path == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto const mpk       = tidlab::read_mpk_file(mpk_path);
    auto const plaintext = read_file(in_path);
    auto const ct        = tidlab::hybrid_encrypt(mpk, plaintext, encryption_seed(seed));
    write_file(out_path, ct.encode());
  });
}

tidlab_status tidlab_decrypt_file(const char *msk_path, const char *in_path, const char *out_path)
{
  if (msk_path == nullptr || in_path == nullptr || out_path == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto const msk  = tidlab::read_msk_file(msk_path);
    auto const data = read_file(in_path);
    // nothing is written unless the tag verifies
    auto const plaintext = tidlab::hybrid_decrypt(msk, tidlab::HybridCiphertext::decode(data));
    write_file(out_path, plaintext);
  });
}

tidlab_status tidlab_encrypt(const char *mpk_hex, const uint8_t *data, size_t len,
                             const char *seed, uint8_t **out, size_t *out_len)
{
  if (mpk_hex == nullptr || (data == nullptr && len != 0) || out == nullptr || out_len == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  *out     = nullptr;
  *out_len = 0;
  return guarded([&] {
    auto const mpk = tidlab::GroupElement::from_hex(mpk_hex);
    std::span<std::uint8_t const> const plaintext{data, len};
    export_bytes(tidlab::hybrid_encrypt(mpk, plaintext, encryption_seed(seed)).encode(), out,
                 out_len);
  });
}

tidlab_status tidlab_decrypt(const char *msk_hex, const uint8_t *data, size_t len, uint8_t **out,
                             size_t *out_len)
{
  if (msk_hex == nullptr || (data == nullptr && len != 0) || out == nullptr || out_len == nullptr)
  {
    return fail(TIDLAB_ERR_ARGUMENT, "null argument");
  }
  *out     = nullptr;
  *out_len = 0;
  return guarded([&] {
    auto const msk = tidlab::Scalar::from_hex(msk_hex);
    std::span<std::uint8_t const> const in{data, len};
    export_bytes(tidlab::hybrid_decrypt(msk, tidlab::HybridCiphertext::decode(in)), out, out_len);
  });
}

void tidlab_bytes_free(uint8_t *bytes)
{
  std::free(bytes);
}

}  // extern "C"
