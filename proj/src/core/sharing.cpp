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

#include "tidlab/sharing.hpp"

#include "tidlab/error.hpp"
#include "tidlab/random.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tidlab {

SharingPolynomial::SharingPolynomial(std::vector<Scalar> coefficients)
  : coefficients_{std::move(coefficients)}
{
  if (coefficients_.empty())
  {
    throw Error(ErrorKind::Domain, "sharing polynomial needs at least a constant term");
  }
}

Scalar SharingPolynomial::evaluate(Scalar const &x) const
{
  Scalar acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
  {
    acc = acc * x + *it;
  }
  return acc;
}

Scalar SharingPolynomial::evaluate(MemberIndex x) const
{
  return evaluate(Scalar::from_u64(x));
}

SharingPolynomial make_polynomial(Scalar const &secret, std::size_t t,
                                  ScalarSource const &randomness)
{
  std::vector<Scalar> coefficients;
  coefficients.reserve(t + 1);
  coefficients.push_back(secret);
  for (std::size_t k = 0; k < t; ++k)
  {
    coefficients.push_back(randomness());
  }
  return SharingPolynomial{std::move(coefficients)};
}

SharingPolynomial make_polynomial(Scalar const &secret, std::size_t t,
                                  std::span<std::uint8_t const> seed)
{
  Drbg rng{Bytes{seed.begin(), seed.end()}};
  return make_polynomial(secret, t, [&rng] { return rng.next_scalar(); });
}

VerificationVector commitment_vector(SharingPolynomial const &poly)
{
  auto               coeffs = poly.coefficients();
  VerificationVector vv;
  vv.pk = generator_exp(coeffs[0]);
  vv.commitments.reserve(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k)
  {
    vv.commitments.push_back(generator_exp(coeffs[k]));
  }
  return vv;
}

bool verify_shadow(Shadow const &shadow, VerificationVector const &vv)
{
  Scalar const j = Scalar::from_u64(shadow.recipient);

  // ((A_t^j * A_{t-1})^j * ... * A_1)^j * pk
  GroupElement rhs = vv.pk;
  if (!vv.commitments.empty())
  {
    GroupElement acc = vv.commitments.back();
    for (std::size_t k = vv.commitments.size() - 1; k-- > 0;)
    {
      acc = group_combine(group_exp(acc, j), vv.commitments[k]);
    }
    rhs = group_combine(group_exp(acc, j), vv.pk);
  }
  return generator_exp(shadow.value) == rhs;
}

Share aggregate_share(MemberIndex holder, std::span<Shadow const> shadows,
                      std::span<MemberIndex const> qualified_senders)
{
  std::set<MemberIndex> const expected(qualified_senders.begin(), qualified_senders.end());
  std::set<MemberIndex>       seen;
  Share                       share{holder, Scalar{}};

  for (auto const &shadow : shadows)
  {
    if (shadow.recipient != holder)
    {
      throw Error(ErrorKind::Aggregation, "shadow from " + std::to_string(shadow.sender) +
                                              " is addressed to " +
                                              std::to_string(shadow.recipient));
    }
    if (expected.count(shadow.sender) == 0)
    {
      throw Error(ErrorKind::Aggregation,
                  "shadow from unqualified sender " + std::to_string(shadow.sender));
    }
    if (!seen.insert(shadow.sender).second)
    {
      throw Error(ErrorKind::Aggregation,
                  "duplicate shadow from sender " + std::to_string(shadow.sender));
    }
    share.value += shadow.value;
  }
  if (seen.size() != expected.size())
  {
    throw Error(ErrorKind::Aggregation, "missing shadow from a qualified sender");
  }
  return share;
}

std::vector<Scalar> lagrange_coefficients_at_zero(std::span<MemberIndex const> indices)
{
  std::vector<Scalar> lambdas;
  lambdas.reserve(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k)
  {
    Scalar const ik  = Scalar::from_u64(indices[k]);
    Scalar       num = Scalar::from_u64(1);
    Scalar       den = Scalar::from_u64(1);
    for (std::size_t l = 0; l < indices.size(); ++l)
    {
      if (l == k)
      {
        continue;
      }
      Scalar const il = Scalar::from_u64(indices[l]);
      num *= il;
      den *= il - ik;
    }
    lambdas.push_back(num * den.inverse());
  }
  return lambdas;
}

Scalar lagrange_reconstruct(std::span<IndexedShare const> shares, std::size_t t)
{
  if (shares.size() != t + 1)
  {
    throw Error(ErrorKind::Reconstruction, "reconstruction needs exactly " +
                                               std::to_string(t + 1) + " shares, got " +
                                               std::to_string(shares.size()));
  }
  std::vector<MemberIndex> indices;
  indices.reserve(shares.size());
  for (auto const &s : shares)
  {
    if (s.index == 0)
    {
      throw Error(ErrorKind::Reconstruction, "share index 0 is reserved for the secret");
    }
    indices.push_back(s.index);
  }
  std::vector<MemberIndex> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
  {
    throw Error(ErrorKind::Reconstruction, "duplicate share index");
  }

  auto   lambdas = lagrange_coefficients_at_zero(indices);
  Scalar secret;
  for (std::size_t k = 0; k < shares.size(); ++k)
  {
    secret += lambdas[k] * shares[k].value;
  }
  return secret;
}

}  // namespace tidlab
