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

#include <span>
#include <string_view>

namespace tidlab {

struct ElGamalCiphertext
{
  GroupElement c1;  // g^r
  GroupElement c2;  // mpk^r * m

  bool operator==(ElGamalCiphertext const &) const = default;
};

ElGamalCiphertext eg_encrypt(GroupElement const &mpk, GroupElement const &m, Scalar const &r);
GroupElement      eg_decrypt(Scalar const &msk, ElGamalCiphertext const &ct);

/// (c1, c2 * c1^b): re-targets a ciphertext under mpk~ to mpk~ * g^b.
ElGamalCiphertext bias_transform(ElGamalCiphertext const &ct, Scalar const &b);

/// Body cipher used by the hybrid path, recorded in run reports.
inline constexpr std::string_view kHybridCipherName = "sha256-ctr+sha256-tag";

/**
 * Submission of arbitrary length. The header wraps a random group element M under mpk;
 * the body is XORed with a SHA-256 counter stream keyed by H(M) and authenticated by
 * a tag over (header || body).
 *
 * Wire format: c1 (64) || c2 (64) || tag (32) || body.
 */
struct HybridCiphertext
{
  static constexpr std::size_t kHeaderSize = 2 * GroupElement::kEncodedSize + 32;

  ElGamalCiphertext header;
  Digest            tag{};
  Bytes             body;

  Bytes encode() const;
  /// Throws Error(Integrity) when shorter than the fixed header, Error(Decode) on
  /// invalid group elements.
  static HybridCiphertext decode(std::span<std::uint8_t const> in);
};

HybridCiphertext hybrid_encrypt(GroupElement const &mpk, std::span<std::uint8_t const> plaintext,
                                std::span<std::uint8_t const> rng_seed);

/// Throws Error(Integrity) when the tag does not verify (wrong key, truncation).
Bytes hybrid_decrypt(Scalar const &msk, HybridCiphertext const &hc);

}  // namespace tidlab
