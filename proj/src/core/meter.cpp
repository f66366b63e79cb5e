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

#include "tidlab/meter.hpp"

namespace tidlab {
namespace {

thread_local CostMeter *active_meter = nullptr;

}  // namespace

MeterScope::MeterScope(CostMeter &meter)
  : previous_{active_meter}
{
  active_meter = &meter;
}

MeterScope::~MeterScope()
{
  active_meter = previous_;
}

namespace metering {

void count_exp()
{
  if (active_meter != nullptr)
  {
    ++active_meter->group_exps;
  }
}

void count_combine()
{
  if (active_meter != nullptr)
  {
    ++active_meter->group_combines;
  }
}

void count_hash()
{
  if (active_meter != nullptr)
  {
    ++active_meter->hash_calls;
  }
}

void count_stored_words(std::uint64_t words)
{
  if (active_meter != nullptr)
  {
    active_meter->stored_words += words;
  }
}

void count_payload_words(std::uint64_t words)
{
  if (active_meter != nullptr)
  {
    active_meter->payload_words += words;
  }
}

}  // namespace metering
}  // namespace tidlab
