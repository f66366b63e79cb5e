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


// tidlab command line. Talks to the library through the C interface only.
//
// exit codes: 0 ok, 1 invariant or crypto failure, 2 usage or parse failure

#include "tidlab/tidlab.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr int kOk      = 0;
constexpr int kFailure = 1;
constexpr int kUsage   = 2;

struct Handles
{
  void operator()(tidlab_scenario *s) const
  {
    tidlab_scenario_free(s);
  }
  void operator()(tidlab_report *r) const
  {
    tidlab_report_free(r);
  }
  void operator()(tidlab_sweep *s) const
  {
    tidlab_sweep_free(s);
  }
};

template <typename T>
using Handle = std::unique_ptr<T, Handles>;

struct Options
{
  bool verbose{false};

  std::string scenario;
  std::string seed;
  std::string out;

  std::vector<std::string> n_list{"4,8,16,32,64"};
  std::vector<std::string> ratios{"1/2", "2/3"};
  bool                     long_points{false};

  std::string key;
  std::string in;

  std::size_t bias_n{8};
  std::string bias;
};

int report_error(tidlab_status status, char const *what)
{
  std::cerr << "tidlab: " << what << ": " << tidlab_last_error() << '\n';
  switch (status)
  {
  case TIDLAB_ERR_INTEGRITY:
  case TIDLAB_ERR_DECODE:
  case TIDLAB_ERR_INTERNAL:
    return kFailure;
  default:
    return kUsage;
  }
}

// Parses "4,8,16" or "4..64" (inclusive), possibly mixed: "4..8,16".
std::optional<std::vector<std::size_t>> parse_n_list(std::vector<std::string> const &items)
{
  auto number = [](std::string_view s) -> std::optional<std::size_t> {
    std::size_t v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
    {
      return std::nullopt;
    }
    return v;
  };
  std::vector<std::size_t> out;
  for (auto const &item : items)
  {
    std::string_view rest{item};
    while (!rest.empty())
    {
      auto const comma = rest.find(',');
      auto const part  = rest.substr(0, comma);
      rest             = comma == std::string_view::npos ? "" : rest.substr(comma + 1);
      if (auto const dots = part.find(".."); dots != std::string_view::npos)
      {
        auto lo = number(part.substr(0, dots));
        auto hi = number(part.substr(dots + 2));
        if (!lo || !hi || *lo > *hi)
        {
          return std::nullopt;
        }
        for (auto v = *lo; v <= *hi; ++v)
        {
          out.push_back(v);
        }
      }
      else if (auto v = number(part))
      {
        out.push_back(*v);
      }
      else
      {
        return std::nullopt;
      }
    }
  }
  if (out.empty())
  {
    return std::nullopt;
  }
  return out;
}

std::vector<std::string> split_ratios(std::vector<std::string> const &items)
{
  std::vector<std::string> out;
  for (auto const &item : items)
  {
    std::size_t start = 0;
    while (start <= item.size())
    {
      auto const comma = item.find(',', start);
      auto const end   = comma == std::string::npos ? item.size() : comma;
      if (end > start)
      {
        out.push_back(item.substr(start, end - start));
      }
      start = end + 1;
    }
  }
  return out;
}

void print_invariants(tidlab_report const *report)
{
  auto const count = tidlab_report_invariant_count(report);
  for (std::size_t i = 0; i < count; ++i)
  {
    char const *name   = nullptr;
    char const *detail = nullptr;
    int         passed = 0;
    tidlab_report_invariant(report, i, &name, &passed, &detail);
    std::cout << "  " << (passed ? "ok   " : "FAIL ") << name;
    if (detail != nullptr && *detail != '\0')
    {
      std::cout << " (" << detail << ')';
    }
    std::cout << '\n';
  }
}

// Shared tail of run and bias-demo.
int finish_report(Options const &opt, tidlab_report const *report, std::string const &label)
{
  if (!opt.out.empty())
  {
    if (auto st = tidlab_report_write(report, opt.out.c_str()); st != TIDLAB_OK)
    {
      return report_error(st, "writing report");
    }
  }
  if (opt.verbose)
  {
    print_invariants(report);
  }
  if (!tidlab_report_passed(report))
  {
    std::cerr << "tidlab: " << label << ": invariant violated: "
              << tidlab_report_first_violation(report) << '\n';
    return kFailure;
  }
  std::cout << label << ": " << tidlab_report_outcome(report) << ", t=" << tidlab_report_threshold(report)
            << ", " << tidlab_report_invariant_count(report) << " invariants hold\n";
  return kOk;
}

int cmd_run(Options const &opt)
{
  tidlab_scenario *raw = nullptr;
  if (auto st = tidlab_scenario_load(opt.scenario.c_str(), &raw); st != TIDLAB_OK)
  {
    return report_error(st, "loading scenario");
  }
  Handle<tidlab_scenario> scenario{raw};

  tidlab_report *rep = nullptr;
  if (auto st = tidlab_run(scenario.get(), opt.seed.c_str(), &rep); st != TIDLAB_OK)
  {
    return report_error(st, "running scenario");
  }
  Handle<tidlab_report> report{rep};
  return finish_report(opt, report.get(), tidlab_scenario_name(scenario.get()));
}

int cmd_sweep(Options const &opt)
{
  auto const ns = parse_n_list(opt.n_list);
  if (!ns)
  {
    std::cerr << "tidlab: --n: expected a list like 4,8,16 or a range like 4..64\n";
    return kUsage;
  }
  auto const ratios = split_ratios(opt.ratios);
  if (ratios.empty())
  {
    std::cerr << "tidlab: --ratio: no ratios given\n";
    return kUsage;
  }

  // ratios outermost, n ascending within a ratio
  std::vector<std::size_t> point_n;
  std::vector<char const *> point_ratio;
  for (auto const &r : ratios)
  {
    for (auto n : *ns)
    {
      point_n.push_back(n);
      point_ratio.push_back(r.c_str());
    }
  }
  if (opt.long_points)
  {
    // both at t = 127
    point_n.push_back(192);
    point_ratio.push_back("2/3");
    point_n.push_back(256);
    point_ratio.push_back("1/2");
  }

  tidlab_sweep *raw = nullptr;
  if (auto st = tidlab_sweep_run(point_n.data(), point_ratio.data(), point_n.size(),
                                 opt.seed.c_str(), &raw);
      st != TIDLAB_OK)
  {
    return report_error(st, "sweep");
  }
  Handle<tidlab_sweep> sweep{raw};

  if (opt.out.empty())
  {
    std::cout << tidlab_sweep_csv(sweep.get());
  }
  else
  {
    std::error_code ec;
    std::filesystem::create_directories(opt.out, ec);
    auto const path = std::filesystem::path{opt.out} / "sweep.csv";
    std::ofstream f{path, std::ios::binary | std::ios::trunc};
    f << tidlab_sweep_csv(sweep.get());
    if (ec || !f)
    {
      std::cerr << "tidlab: cannot write " << path.string() << '\n';
      return kUsage;
    }
  }

  auto const failures = tidlab_sweep_failure_count(sweep.get());
  for (std::size_t i = 0; i < failures; ++i)
  {
    std::cerr << "tidlab: sweep: " << tidlab_sweep_failure(sweep.get(), i) << '\n';
  }
  if (failures != 0)
  {
    return kFailure;
  }
  if (!opt.out.empty() || opt.verbose)
  {
    std::cerr << "sweep: " << point_n.size() << " points, formulas hold, dispute exps = (t+1) + "
              << tidlab_sweep_dispute_constant(sweep.get()) << '\n';
  }
  return kOk;
}

int cmd_encrypt(Options const &opt)
{
  char const *seed = opt.seed.empty() ? nullptr : opt.seed.c_str();
  if (auto st = tidlab_encrypt_file(opt.key.c_str(), opt.in.c_str(), opt.out.c_str(), seed);
      st != TIDLAB_OK)
  {
    return report_error(st, "encrypt");
  }
  return kOk;
}

int cmd_decrypt(Options const &opt)
{
  if (auto st = tidlab_decrypt_file(opt.key.c_str(), opt.in.c_str(), opt.out.c_str());
      st != TIDLAB_OK)
  {
    return report_error(st, "decrypt");
  }
  return kOk;
}

int cmd_bias_demo(Options const &opt)
{
  tidlab_report *rep  = nullptr;
  char const    *bias = opt.bias.empty() ? nullptr : opt.bias.c_str();
  if (auto st = tidlab_bias_demo(opt.bias_n, bias, opt.seed.c_str(), &rep); st != TIDLAB_OK)
  {
    return report_error(st, "bias-demo");
  }
  Handle<tidlab_report> report{rep};
  return finish_report(opt, report.get(), "bias-demo n=" + std::to_string(opt.bias_n));
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"tidlab: threshold key council simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string{tidlab_version()});

  Options opt;
  app.add_flag("-v,--verbose", opt.verbose, "Print every invariant verdict");

  auto add_seed = [&](CLI::App *cmd, bool required) {
    auto *o = cmd->add_option("--seed", opt.seed, "Deterministic seed")->envname("TIDLAB_SEED");
    if (required)
    {
      o->required();
    }
  };

  auto *run = app.add_subcommand("run", "Run a scenario file end to end");
  run->add_option("--scenario", opt.scenario, "Scenario file")->required();
  add_seed(run, true);
  run->add_option("--out", opt.out, "Directory for report files");

  auto *sweep = app.add_subcommand("sweep", "Meter every function across council sizes");
  sweep->add_option("--n", opt.n_list, "Council sizes: list (4,8) or range (4..64)")
      ->capture_default_str();
  sweep->add_option("--ratio", opt.ratios, "Threshold ratios")->capture_default_str();
  sweep->add_flag("--long", opt.long_points, "Also meter n=192 at 2/3 and n=256 at 1/2 (t=127)");
  add_seed(sweep, true);
  sweep->add_option("--out", opt.out, "Directory for sweep.csv (stdout if omitted)");

  auto *encrypt = app.add_subcommand("encrypt", "Encrypt a file under a master public key");
  encrypt->add_option("--key", opt.key, "mpk key file")->required();
  encrypt->add_option("--in", opt.in, "Plaintext file")->required();
  encrypt->add_option("--out", opt.out, "Ciphertext file")->required();
  add_seed(encrypt, false);

  auto *decrypt = app.add_subcommand("decrypt", "Decrypt a file with the master secret key");
  decrypt->add_option("--key", opt.key, "msk key file")->required();
  decrypt->add_option("--in", opt.in, "Ciphertext file")->required();
  decrypt->add_option("--out", opt.out, "Plaintext file")->required();

  auto *bias = app.add_subcommand("bias-demo", "Run a council with one biasing member");
  bias->add_option("--n", opt.bias_n, "Council size")->capture_default_str()->check(
      CLI::Range(std::size_t{2}, std::size_t{1024}));
  bias->add_option("--bias", opt.bias, "Bias exponent in hex (derived from the seed if omitted)");
  add_seed(bias, true);
  bias->add_option("--out", opt.out, "Directory for report files");

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (opt.seed.empty() && (run->parsed() || sweep->parsed() || bias->parsed()))
  {
    std::cerr << "tidlab: --seed (or TIDLAB_SEED) must not be empty\n";
    return kUsage;
  }

  if (run->parsed())
  {
    return cmd_run(opt);
  }
  if (sweep->parsed())
  {
    return cmd_sweep(opt);
  }
  if (encrypt->parsed())
  {
    return cmd_encrypt(opt);
  }
  if (decrypt->parsed())
  {
    return cmd_decrypt(opt);
  }
  return cmd_bias_demo(opt);
}
