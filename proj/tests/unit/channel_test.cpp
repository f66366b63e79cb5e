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
#include "tidlab/meter.hpp"
#include "tidlab/random.hpp"

#include <catch_amalgamated.hpp>

using namespace tidlab;

namespace {

Scalar s(std::uint64_t v)
{
  return Scalar::from_u64(v);
}

Bytes ctx(std::string_view text)
{
  return Bytes{text.begin(), text.end()};
}

}  // namespace

TEST_CASE("pairwise keys agree", "[channel]")
{
  auto a = ChannelKeyPair::from_secret(s(3));
  auto b = ChannelKeyPair::from_secret(s(4));
  CHECK(a.public_key == generator_exp(s(3)));
  CHECK(derive_symmetric_key(a, b.public_key).value == generator_exp(s(12)));
  CHECK(derive_symmetric_key(b, a.public_key).value == generator_exp(s(12)));
  CHECK(derive_symmetric_key(a, a.public_key).value == generator_exp(s(9)));

  Drbg rng{"pairs"};
  for (int k = 0; k < 100; ++k)
  {
    auto x = ChannelKeyPair::from_secret(rng.next_nonzero_scalar());
    auto y = ChannelKeyPair::from_secret(rng.next_nonzero_scalar());
    REQUIRE(derive_symmetric_key(x, y.public_key) == derive_symmetric_key(y, x.public_key));
  }
}

TEST_CASE("pad matches an independent hash computation", "[channel]")
{
  // SHA-256(enc(g^12) || uint256(j)) mod r, computed outside this code base.
  SymmetricKey const k{generator_exp(s(12))};
  CHECK(k.value.to_hex() ==
        "25d32c471c8cd1ab9ac9b4118d040166f75ad9e4f36526b09fc0b7d1002bc851"
        "2db09ae9bc0cb9addf3404069078f0367ff42b63cb1c200bae5bf9095585b69c");
  CHECK(shadow_pad(k, 1).to_hex() ==
        "1ba0dd457d8958df345bbb585a4a3544b022b0216d070539738df770be6ab687");
  CHECK(shadow_pad(k, 2).to_hex() ==
        "2d9a65b76312569142573c9f96546c486fd793d0d05161dc83573ec51ba835cf");
  CHECK(shadow_pad(k, 5).to_hex() ==
        "2b1c347ea3544d7aef4597a9a0148d49e74447d76d2cd035ca033190feee362e");
  CHECK(encrypt_shadow(Shadow{1, 2, s(9)}, k).ciphertext.to_hex() ==
        "2d9a65b76312569142573c9f96546c486fd793d0d05161dc83573ec51ba835d8");
}

TEST_CASE("shadow encryption round trip and pad separation", "[channel]")
{
  Drbg rng{"pads"};
  for (int n = 0; n < 100; ++n)
  {
    SymmetricKey const k{generator_exp(rng.next_nonzero_scalar())};
    Scalar const       u = rng.next_scalar();
    MemberIndex const  j = 1 + n % 50;
    auto               es = encrypt_shadow(Shadow{7, j, u}, k);
    REQUIRE(decrypt_shadow(es, k) == u);
    CHECK(shadow_pad(k, j) != shadow_pad(k, j + 1));
  }

  // Same value in both directions still yields different ciphertexts.
  SymmetricKey const k{generator_exp(s(77))};
  auto               ij = encrypt_shadow(Shadow{1, 2, s(5)}, k);
  auto               ji = encrypt_shadow(Shadow{2, 1, s(5)}, k);
  CHECK(ij.ciphertext != ji.ciphertext);
}

TEST_CASE("decrypting under a wrong key breaks the shadow check", "[channel]")
{
  Drbg rng{"wrong-key"};
  std::vector<Scalar> coeffs{rng.next_scalar(), rng.next_scalar(), rng.next_scalar()};
  SharingPolynomial   p{coeffs};
  auto                vv = commitment_vector(p);
  SymmetricKey const  good{generator_exp(rng.next_nonzero_scalar())};
  auto                es = encrypt_shadow(Shadow{1, 4, p.evaluate(4u)}, good);
  REQUIRE(verify_shadow(Shadow{1, 4, decrypt_shadow(es, good)}, vv));
  for (int n = 0; n < 100; ++n)
  {
    SymmetricKey const bad{generator_exp(rng.next_nonzero_scalar())};
    CHECK_FALSE(verify_shadow(Shadow{1, 4, decrypt_shadow(es, bad)}, vv));
  }
}

TEST_CASE("key correctness proofs", "[channel]")
{
  Drbg rng{"dleq"};
  for (int n = 0; n < 100; ++n)
  {
    auto         j       = ChannelKeyPair::from_secret(rng.next_nonzero_scalar());
    auto         i       = ChannelKeyPair::from_secret(rng.next_nonzero_scalar());
    auto         k       = derive_symmetric_key(j, i.public_key);
    Bytes const  context = ctx("instance-" + std::to_string(n));
    auto         proof   = prove_key(j, i.public_key, k, context);

    REQUIRE(verify_key(j.public_key, i.public_key, k, proof, context));
    SymmetricKey wrong{group_combine(k.value, GroupElement::generator())};
    CHECK_FALSE(verify_key(j.public_key, i.public_key, wrong, proof, context));
    auto forged = prove_key(j, i.public_key, wrong, context);
    CHECK_FALSE(verify_key(j.public_key, i.public_key, wrong, forged, context));
    CHECK_FALSE(verify_key(j.public_key, i.public_key, k, proof, ctx("other")));
    CHECK_FALSE(verify_key(i.public_key, j.public_key, k, proof, context));
    KeyCorrectnessProof zeroed = proof;
    zeroed.response            = Scalar{};
    CHECK_FALSE(verify_key(j.public_key, i.public_key, k, zeroed, context));
  }
}

TEST_CASE("proof encoding", "[channel]")
{
  auto j     = ChannelKeyPair::from_secret(s(21));
  auto i     = ChannelKeyPair::from_secret(s(34));
  auto k     = derive_symmetric_key(j, i.public_key);
  auto proof = prove_key(j, i.public_key, k, ctx("x"));
  auto bytes = proof.encode();
  REQUIRE(bytes.size() == KeyCorrectnessProof::kEncodedSize);
  auto back = KeyCorrectnessProof::decode(bytes);
  CHECK(back.challenge == proof.challenge);
  CHECK(back.response == proof.response);
  CHECK_THROWS_AS(KeyCorrectnessProof::decode(std::span{bytes}.first(63)), Error);

  // deterministic nonce: identical inputs give identical transcripts
  auto again = prove_key(j, i.public_key, k, ctx("x"));
  CHECK(again.encode() == bytes);
}

TEST_CASE("verification cost does not depend on council size", "[channel][meter]")
{
  auto      j = ChannelKeyPair::from_secret(s(5));
  auto      i = ChannelKeyPair::from_secret(s(6));
  auto      k = derive_symmetric_key(j, i.public_key);
  for (std::uint32_t n : {4u, 64u, 256u})
  {
    Bytes     context = dispute_context(ctx("id"), 1, n);
    auto      proof   = prove_key(j, i.public_key, k, context);
    CostMeter m;
    {
      MeterScope scope{m};
      REQUIRE(verify_key(j.public_key, i.public_key, k, proof, context));
    }
    CHECK(m.group_exps == kVerifyKeyExps);
    CHECK(m.hash_calls == 1);
  }
}

TEST_CASE("dispute context layout", "[channel]")
{
  Bytes const c = dispute_context(ctx("ab"), 3, 258);
  REQUIRE(c.size() == 2 + 64);
  CHECK(c[0] == 'a');
  CHECK(c[1] == 'b');
  CHECK(c[2 + 31] == 3);
  CHECK(c[2 + 62] == 1);
  CHECK(c[2 + 63] == 2);
}

TEST_CASE("identity keys are refused", "[channel]")
{
  auto a = ChannelKeyPair::from_secret(s(3));
  CHECK_THROWS_AS(derive_symmetric_key(a, GroupElement::identity()), Error);
}
