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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tidlab {

/// 1-based council index. Index 0 is the evaluation point of the secret.
using MemberIndex = std::uint32_t;

using ScalarSource = std::function<Scalar()>;

/// Degree-t polynomial whose constant term is a member's secret contribution.
class SharingPolynomial
{
public:
  explicit SharingPolynomial(std::vector<Scalar> coefficients);

  std::size_t degree() const
  {
    return coefficients_.size() - 1;
  }

  Scalar const &secret() const
  {
    return coefficients_.front();
  }

  std::span<Scalar const> coefficients() const
  {
    return coefficients_;
  }

  Scalar evaluate(Scalar const &x) const;
  Scalar evaluate(MemberIndex x) const;

private:
  std::vector<Scalar> coefficients_;
};

/// Draws the t non-constant coefficients from `randomness`, in order a_1..a_t.
SharingPolynomial make_polynomial(Scalar const &secret, std::size_t t,
                                  ScalarSource const &randomness);
SharingPolynomial make_polynomial(Scalar const &secret, std::size_t t,
                                  std::span<std::uint8_t const> seed);

/// pk_i = g^{sk_i} and the Feldman commitments A_{i,k} = g^{a_{i,k}}, k = 1..t.
struct VerificationVector
{
  GroupElement              pk;
  std::vector<GroupElement> commitments;

  std::size_t degree() const
  {
    return commitments.size();
  }
};

VerificationVector commitment_vector(SharingPolynomial const &poly);

struct Shadow
{
  MemberIndex sender{0};
  MemberIndex recipient{0};
  Scalar      value;
};

struct Share
{
  MemberIndex holder{0};
  Scalar      value;
};

/// g^u == pk * prod_k A_k^{j^k}, evaluated by Horner's rule in the exponent.
/// Costs t+1 exponentiations (one by u, t by the small recipient index).
bool verify_shadow(Shadow const &shadow, VerificationVector const &vv);

/// Sums exactly one shadow from each of `qualified_senders`.
/// Throws Error(Aggregation) on duplicate, missing, unexpected or misaddressed shadows.
Share aggregate_share(MemberIndex holder, std::span<Shadow const> shadows,
                      std::span<MemberIndex const> qualified_senders);

struct IndexedShare
{
  MemberIndex index{0};
  Scalar      value;
};

/// Lagrange weights for evaluating at 0 from the given distinct nonzero indices.
std::vector<Scalar> lagrange_coefficients_at_zero(std::span<MemberIndex const> indices);

/// p(0) of the unique degree-<=t polynomial through exactly t+1 shares.
/// Throws Error(Reconstruction) on wrong count, zero or duplicate indices.
Scalar lagrange_reconstruct(std::span<IndexedShare const> shares, std::size_t t);

}  // namespace tidlab
