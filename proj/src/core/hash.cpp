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

#include "tidlab/hash.hpp"

#include "tidlab/error.hpp"
#include "tidlab/meter.hpp"

#include <openssl/evp.h>

namespace tidlab {

struct Hasher::Impl
{
  EVP_MD_CTX *ctx{EVP_MD_CTX_new()};

  Impl()
  {
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1)
    {
      throw std::runtime_error("sha256 context initialisation failed");
    }
  }

  ~Impl()
  {
    EVP_MD_CTX_free(ctx);
  }
};

Hasher::Hasher()
  : impl_{std::make_unique<Impl>()}
{}

Hasher::~Hasher()                         = default;
Hasher::Hasher(Hasher &&) noexcept        = default;
Hasher &Hasher::operator=(Hasher &&) noexcept = default;

Hasher &Hasher::update(std::span<std::uint8_t const> data)
{
  EVP_DigestUpdate(impl_->ctx, data.data(), data.size());
  return *this;
}

Hasher &Hasher::update(std::string_view text)
{
  EVP_DigestUpdate(impl_->ctx, text.data(), text.size());
  return *this;
}

Hasher &Hasher::update_u64(std::uint64_t v)
{
  std::array<std::uint8_t, 8> be{};
  for (std::size_t i = 0; i < 8; ++i)
  {
    be[i] = static_cast<std::uint8_t>(v >> (8 * (7 - i)));
  }
  return update(be);
}

Digest Hasher::finalize()
{
  Digest       out{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(impl_->ctx, out.data(), &len);
  metering::count_hash();
  return out;
}

Digest hash_digest(std::span<std::uint8_t const> data)
{
  return Hasher{}.update(data).finalize();
}

std::string to_hex(std::span<std::uint8_t const> data)
{
  static constexpr char digits[] = "0123456789abcdef";
  std::string           out;
  out.reserve(data.size() * 2);
  for (auto b : data)
  {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex)
{
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9')
    {
      return c - '0';
    }
    if (c >= 'a' && c <= 'f')
    {
      return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F')
    {
      return c - 'A' + 10;
    }
    return -1;
  };

  if (hex.size() % 2 != 0)
  {
    throw Error(ErrorKind::Decode, "hex string has odd length");
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
  {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0)
    {
      throw Error(ErrorKind::Decode, "invalid hex digit");
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

}  // namespace tidlab
