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

#include <cstdint>

namespace tidlab {

/// Abstract resource counters for one coordinator transaction. Stands in for gas.
/// Word convention: a scalar is one 32-byte word, a group element two.
struct CostMeter
{
  std::uint64_t group_exps{0};
  std::uint64_t group_combines{0};
  std::uint64_t hash_calls{0};
  std::uint64_t stored_words{0};
  std::uint64_t payload_words{0};

  bool operator==(CostMeter const &) const = default;
};

/**
 * Installs a meter as the active sink for the current thread for the lifetime of the
 * scope. Group and hash primitives report to the innermost active meter; outside any
 * scope they count nothing. Scopes nest and restore the previous sink on exit.
 */
class MeterScope
{
public:
  explicit MeterScope(CostMeter &meter);
  ~MeterScope();

  MeterScope(MeterScope const &)            = delete;
  MeterScope &operator=(MeterScope const &) = delete;

private:
  CostMeter *previous_;
};

namespace metering {

void count_exp();
void count_combine();
void count_hash();
void count_stored_words(std::uint64_t words);
void count_payload_words(std::uint64_t words);

}  // namespace metering
}  // namespace tidlab
