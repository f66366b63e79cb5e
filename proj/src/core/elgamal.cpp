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

#include "tidlab/elgamal.hpp"

#include "tidlab/error.hpp"
#include "tidlab/random.hpp"

#include <algorithm>

namespace tidlab {

ElGamalCiphertext eg_encrypt(GroupElement const &mpk, GroupElement const &m, Scalar const &r)
{
  return {generator_exp(r), group_combine(group_exp(mpk, r), m)};
}

GroupElement eg_decrypt(Scalar const &msk, ElGamalCiphertext const &ct)
{
  return group_combine(ct.c2, group_exp(ct.c1, msk).inverse());
}

ElGamalCiphertext bias_transform(ElGamalCiphertext const &ct, Scalar const &b)
{
  return {ct.c1, group_combine(ct.c2, group_exp(ct.c1, b))};
}

namespace {

Digest body_key(GroupElement const &wrapped)
{
  return Hasher{}.update("tidlab/hybrid-key").update(wrapped.encode()).finalize();
}

void apply_keystream(Digest const &key, std::span<std::uint8_t> data)
{
  for (std::size_t block = 0; block * 32 < data.size(); ++block)
  {
    Digest pad = Hasher{}.update("tidlab/hybrid-stream").update(key).update_u64(block).finalize();
    std::size_t const begin = block * 32;
    std::size_t const end   = std::min(data.size(), begin + 32);
    for (std::size_t i = begin; i < end; ++i)
    {
      data[i] ^= pad[i - begin];
    }
  }
}

Digest body_tag(Digest const &key, ElGamalCiphertext const &header,
                std::span<std::uint8_t const> body)
{
  return Hasher{}
      .update("tidlab/hybrid-tag")
      .update(key)
      .update(header.c1.encode())
      .update(header.c2.encode())
      .update(body)
      .finalize();
}

}  // namespace

Bytes HybridCiphertext::encode() const
{
  Bytes out = header.c1.encode();
  Bytes c2  = header.c2.encode();
  out.insert(out.end(), c2.begin(), c2.end());
  out.insert(out.end(), tag.begin(), tag.end());
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

HybridCiphertext HybridCiphertext::decode(std::span<std::uint8_t const> in)
{
  if (in.size() < kHeaderSize)
  {
    throw Error(ErrorKind::Integrity, "hybrid ciphertext is truncated");
  }
  HybridCiphertext hc;
  hc.header.c1 = GroupElement::decode(in.subspan(0, 64));
  hc.header.c2 = GroupElement::decode(in.subspan(64, 64));
  std::copy_n(in.begin() + 128, 32, hc.tag.begin());
  hc.body.assign(in.begin() + kHeaderSize, in.end());
  return hc;
}

HybridCiphertext hybrid_encrypt(GroupElement const &mpk, std::span<std::uint8_t const> plaintext,
                                std::span<std::uint8_t const> rng_seed)
{
  Drbg         rng{Bytes{rng_seed.begin(), rng_seed.end()}};
  GroupElement wrapped = generator_exp(rng.next_nonzero_scalar());
  Scalar       r       = rng.next_nonzero_scalar();

  HybridCiphertext hc;
  hc.header = eg_encrypt(mpk, wrapped, r);
  Digest key = body_key(wrapped);
  hc.body.assign(plaintext.begin(), plaintext.end());
  apply_keystream(key, hc.body);
  hc.tag = body_tag(key, hc.header, hc.body);
  return hc;
}

Bytes hybrid_decrypt(Scalar const &msk, HybridCiphertext const &hc)
{
  GroupElement wrapped = eg_decrypt(msk, hc.header);
  Digest       key     = body_key(wrapped);
  if (body_tag(key, hc.header, hc.body) != hc.tag)
  {
    throw Error(ErrorKind::Integrity, "hybrid ciphertext tag mismatch");
  }
  Bytes plain = hc.body;
  apply_keystream(key, plain);
  return plain;
}

}  // namespace tidlab
