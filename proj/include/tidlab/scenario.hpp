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
#include "tidlab/member.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tidlab {

enum class RevealPolicy
{
  All,      // every qualified member whose strategy reveals
  Minimal,  // the lowest t+1 of those
  Count,    // the lowest `reveal_count` of those
};

enum class Expectation
{
  Completed,    // msk accepted
  Aborted,      // too few qualified members left
  Unrecovered,  // mpk published but fewer than t+1 shares revealed
};

std::string_view expectation_name(Expectation e);

/// Either literal bytes or `random_bytes` drawn from the run seed.
struct SubmissionSpec
{
  Bytes       literal;
  std::size_t random_bytes{0};
  bool        is_random{false};
};

struct FalseAccusation
{
  MemberIndex accuser{0};
  MemberIndex accused{0};
};

struct Scenario
{
  std::string    name{"unnamed"};
  std::size_t    n{4};
  ThresholdRatio ratio;

  std::uint64_t registration_blocks{4};
  std::uint64_t distribution_blocks{4};
  std::uint64_t dispute_blocks{4};
  std::uint64_t delta_hold{2};
  std::uint64_t deposit{1000};

  /// One entry per member in registration order (member index = position + 1).
  std::vector<Strategy> strategies;

  RevealPolicy reveal{RevealPolicy::All};
  std::size_t  reveal_count{0};

  std::vector<SubmissionSpec>  submissions;
  std::vector<FalseAccusation> false_accusations;
  Expectation                  expect{Expectation::Completed};

  /// Throws Error(Parse) on inconsistent settings.
  void validate() const;
};

/// Structured-text scenario:
///
///   name: sad_16
///   n: 16
///   ratio: 1/2
///   schedule: {registration: 4, distribution: 4, dispute: 4, delta_hold: 2}
///   deposit: 1000
///   members:
///     - {index: 3, strategy: invalid_shadow, target: 1}
///   reveal: minimal          # all | minimal | <count>
///   false_accusations: [{accuser: 2, accused: 4}]
///   submissions: ["hello", {random_bytes: 64}]
///   expect: completed        # completed | aborted | unrecovered
///
/// Unlisted members are honest. A biasing member takes `bias: <hex>`.
/// Throws Error(Parse).
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(std::filesystem::path const &path);

Scenario happy_scenario(std::size_t n, ThresholdRatio ratio, std::size_t submissions = 3);
/// Member 3 corrupts its shadow to member 1, only t+1 members reveal, and member 2
/// files one unfounded dispute against member 4.
Scenario sad_scenario(std::size_t n, ThresholdRatio ratio);

}  // namespace tidlab
