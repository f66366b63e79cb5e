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

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tidlab {

using Bytes  = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

/// Name of the protocol hash, recorded in run reports so transcripts are portable.
inline constexpr std::string_view kHashFunctionName = "sha256";

/// Incremental SHA-256. Each finalize() counts as one hash call on the active meter.
class Hasher
{
public:
  Hasher();
  ~Hasher();
  Hasher(Hasher &&) noexcept;
  Hasher &operator=(Hasher &&) noexcept;

  Hasher &update(std::span<std::uint8_t const> data);
  Hasher &update(std::string_view text);
  Hasher &update_u64(std::uint64_t v);
  Digest  finalize();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Digest hash_digest(std::span<std::uint8_t const> data);

std::string to_hex(std::span<std::uint8_t const> data);
Bytes       from_hex(std::string_view hex);

}  // namespace tidlab
