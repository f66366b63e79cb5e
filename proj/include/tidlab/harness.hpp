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

#pragma once

#include "tidlab/contract.hpp"
#include "tidlab/ledger.hpp"
#include "tidlab/scenario.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tidlab {

struct InvariantVerdict
{
  std::string name;
  bool        passed{true};
  std::string detail;
};

struct MeterRow
{
  std::uint64_t height{0};
  Function      function{Function::Sync};
  bool          accepted{false};
  CostMeter     meter;
};

struct SubmissionRecord
{
  Digest plaintext_digest{};
  Digest ciphertext_digest{};
  Bytes  ciphertext;
  bool   decrypted{false};
};

struct RunReport
{
  std::string scenario;
  std::string seed;
  std::size_t n{0};
  std::optional<std::size_t> t;
  Phase       final_phase{Phase::Setup};
  Expectation outcome{Expectation::Unrecovered};

  std::vector<MemberIndex>                                     qualified;
  std::vector<std::pair<MemberIndex, DisqualificationCause>> disqualified;
  std::vector<MemberIndex>                                     revealed;
  std::optional<GroupElement> mpk;
  std::optional<Scalar>       msk;
  std::optional<GroupElement> partial_mpk;  // biasing runs only

  std::vector<SubmissionRecord> submissions;
  std::vector<InvariantVerdict> invariants;
  std::vector<LogEntry>         log;
  std::uint64_t                 slashed_pool{0};

  bool passed() const;
  /// First failing verdict, if any.
  std::optional<InvariantVerdict> first_violation() const;

  std::vector<MeterRow> meter_rows() const;

  /// Writes log.jsonl, meter.csv, report.json, mpk.key / msk.key when present, and one
  /// submission_<k>.tidc per user submission.
  void write(std::filesystem::path const &dir) const;
};

/// Runs the full protocol for `scenario` with all randomness derived from `seed` and
/// checks every invariant. Never throws for protocol-level failures: they show up as
/// failed verdicts. Throws Error(Parse) if the scenario is inconsistent.
RunReport run_scenario(Scenario const &scenario, std::string_view seed);

struct SweepRow
{
  Function       function{Function::Sync};
  std::size_t    n{0};
  ThresholdRatio ratio;
  std::size_t    t{0};
  std::size_t    qualified{0};
  CostMeter      meter;
};

struct SweepReport
{
  std::vector<SweepRow>    rows;
  std::vector<std::string> failures;
  /// group_exps of submit_dispute minus (t+1); the same at every point on success.
  std::optional<std::uint64_t> dispute_constant;

  bool passed() const
  {
    return failures.empty();
  }
  void write_csv(std::ostream &out) const;
};

struct SweepPoint
{
  std::size_t    n{0};
  ThresholdRatio ratio;
};

/// One council per point with a single invalid-shadow member, asserting the
/// closed-form meter formulas.
SweepReport cost_sweep(std::vector<SweepPoint> const &points, std::string_view seed);
/// Every (n, ratio) combination, ratios outermost.
SweepReport cost_sweep(std::vector<std::size_t> const &n_values,
                       std::vector<ThresholdRatio> const &ratios, std::string_view seed);

/// Council of n whose last member biases mpk by g^b.
RunReport biasing_demo(std::size_t n, Scalar const &b, std::string_view seed);

std::string report_json(RunReport const &report);
void        write_meter_csv(std::ostream &out, RunReport const &report);

}  // namespace tidlab
