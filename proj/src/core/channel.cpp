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

#include "tidlab/channel.hpp"

#include "tidlab/error.hpp"

namespace tidlab {
namespace {

std::array<std::uint8_t, 32> index_word(std::uint64_t index)
{
  std::array<std::uint8_t, 32> w{};
  for (std::size_t i = 0; i < 8; ++i)
  {
    w[31 - i] = static_cast<std::uint8_t>(index >> (8 * i));
  }
  return w;
}

Scalar dleq_challenge(GroupElement const &prover_public, GroupElement const &other_public,
                      SymmetricKey const &k, GroupElement const &t1, GroupElement const &t2,
                      std::span<std::uint8_t const> context)
{
  Digest d = Hasher{}
                 .update("tidlab/dleq")
                 .update(group_context().generator.encode())
                 .update(prover_public.encode())
                 .update(other_public.encode())
                 .update(k.value.encode())
                 .update(t1.encode())
                 .update(t2.encode())
                 .update(context)
                 .finalize();
  return Scalar::from_digest(d);
}

}  // namespace

ChannelKeyPair ChannelKeyPair::from_secret(Scalar const &secret)
{
  return {secret, generator_exp(secret)};
}

Bytes KeyCorrectnessProof::encode() const
{
  Bytes out = challenge.encode();
  Bytes r   = response.encode();
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

KeyCorrectnessProof KeyCorrectnessProof::decode(std::span<std::uint8_t const> in)
{
  if (in.size() != kEncodedSize)
  {
    throw Error(ErrorKind::Decode, "key proof encoding must be 64 bytes");
  }
  return {Scalar::decode(in.first(32)), Scalar::decode(in.subspan(32, 32))};
}

SymmetricKey derive_symmetric_key(ChannelKeyPair const &own, GroupElement const &other_public)
{
  if (other_public.is_identity())
  {
    throw Error(ErrorKind::Decode, "channel public key must not be the identity");
  }
  return {group_exp(other_public, own.secret)};
}

Scalar shadow_pad(SymmetricKey const &k, MemberIndex recipient)
{
  std::array<std::uint8_t, GroupElement::kEncodedSize + 32> input{};
  k.value.encode_to(std::span<std::uint8_t, GroupElement::kEncodedSize>{input.data(),
                                                                        GroupElement::kEncodedSize});
  auto word = index_word(recipient);
  std::copy(word.begin(), word.end(), input.begin() + GroupElement::kEncodedSize);
  return hash_to_scalar(input);
}

EncryptedShadow encrypt_shadow(Shadow const &shadow, SymmetricKey const &k)
{
  return {shadow.sender, shadow.recipient, shadow.value + shadow_pad(k, shadow.recipient)};
}

Scalar decrypt_shadow(EncryptedShadow const &es, SymmetricKey const &k)
{
  return es.ciphertext - shadow_pad(k, es.recipient);
}

Bytes dispute_context(std::span<std::uint8_t const> instance_id, MemberIndex sender,
                      MemberIndex recipient)
{
  Bytes out{instance_id.begin(), instance_id.end()};
  for (auto idx : {sender, recipient})
  {
    auto w = index_word(idx);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

KeyCorrectnessProof prove_key(ChannelKeyPair const &own, GroupElement const &other_public,
                              SymmetricKey const &k, std::span<std::uint8_t const> context)
{
  // Deterministic nonce bound to the witness and the full statement.
  Scalar w = Scalar::from_digest(Hasher{}
                                     .update("tidlab/dleq-nonce")
                                     .update(own.secret.encode())
                                     .update(other_public.encode())
                                     .update(k.value.encode())
                                     .update(context)
                                     .finalize());
  if (w.is_zero())
  {
    w = Scalar::from_u64(1);
  }
  GroupElement t1 = generator_exp(w);
  GroupElement t2 = group_exp(other_public, w);
  Scalar       c  = dleq_challenge(own.public_key, other_public, k, t1, t2, context);
  return {c, w - c * own.secret};
}

bool verify_key(GroupElement const &prover_public, GroupElement const &other_public,
                SymmetricKey const &k, KeyCorrectnessProof const &proof,
                std::span<std::uint8_t const> context)
{
  // t1 = g^r * P^c, t2 = Q^r * K^c
  GroupElement t1 = group_combine(generator_exp(proof.response),
                                  group_exp(prover_public, proof.challenge));
  GroupElement t2 = group_combine(group_exp(other_public, proof.response),
                                  group_exp(k.value, proof.challenge));
  return dleq_challenge(prover_public, other_public, k, t1, t2, context) == proof.challenge;
}

}  // namespace tidlab
