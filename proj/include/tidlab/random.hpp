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

#include "tidlab/group.hpp"
#include "tidlab/hash.hpp"

#include <cstdint>
#include <string_view>

namespace tidlab {

/// Hash-counter deterministic generator. Every draw is random_scalar / SHA-256 over
/// (seed, counter), so a fixed seed replays the identical stream.
class Drbg
{
public:
  explicit Drbg(Bytes seed);
  explicit Drbg(std::string_view seed);

  /// Independent child stream for a labelled purpose.
  Drbg fork(std::string_view label) const;
  Drbg fork(std::string_view label, std::uint64_t index) const;

  Scalar next_scalar();
  Scalar next_nonzero_scalar();
  Bytes  next_bytes(std::size_t count);

  Bytes const &seed() const
  {
    return seed_;
  }

private:
  Bytes         seed_;
  std::uint64_t counter_{0};
};

}  // namespace tidlab
