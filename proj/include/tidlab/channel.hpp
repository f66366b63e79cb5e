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
#include "tidlab/sharing.hpp"

#include <array>
#include <span>

namespace tidlab {

struct ChannelKeyPair
{
  Scalar       secret;
  GroupElement public_key;

  static ChannelKeyPair from_secret(Scalar const &secret);
};

/// Pairwise DH key k_ij = pk^_j^{sk^_i} = pk^_i^{sk^_j}.
struct SymmetricKey
{
  GroupElement value;

  bool operator==(SymmetricKey const &) const = default;
};

struct EncryptedShadow
{
  MemberIndex sender{0};
  MemberIndex recipient{0};
  Scalar      ciphertext;
};

/// Chaum-Pedersen proof that log_g(prover_public) == log_{other_public}(k),
/// made non-interactive with the protocol hash.
struct KeyCorrectnessProof
{
  static constexpr std::size_t kEncodedSize = 64;

  Scalar challenge;
  Scalar response;

  Bytes                      encode() const;  // challenge || response
  static KeyCorrectnessProof decode(std::span<std::uint8_t const> in);
};

/// Throws Error(Decode) when `other_public` is the identity.
SymmetricKey derive_symmetric_key(ChannelKeyPair const &own, GroupElement const &other_public);

/// One-time pad H(encode(k) || encode(recipient)) reduced to a scalar. The recipient
/// index is encoded as a 32-byte big-endian word.
Scalar shadow_pad(SymmetricKey const &k, MemberIndex recipient);

EncryptedShadow encrypt_shadow(Shadow const &shadow, SymmetricKey const &k);
Scalar          decrypt_shadow(EncryptedShadow const &es, SymmetricKey const &k);

/// Context binding a dispute proof to one coordinator instance and one
/// (sender, recipient) pair.
Bytes dispute_context(std::span<std::uint8_t const> instance_id, MemberIndex sender,
                      MemberIndex recipient);

KeyCorrectnessProof prove_key(ChannelKeyPair const &own, GroupElement const &other_public,
                              SymmetricKey const &k, std::span<std::uint8_t const> context);

/// Four exponentiations and two combines regardless of council size.
bool verify_key(GroupElement const &prover_public, GroupElement const &other_public,
                SymmetricKey const &k, KeyCorrectnessProof const &proof,
                std::span<std::uint8_t const> context);

inline constexpr std::uint64_t kVerifyKeyExps = 4;

}  // namespace tidlab
