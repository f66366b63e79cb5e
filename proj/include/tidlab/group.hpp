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

#include "tidlab/field.hpp"
#include "tidlab/hash.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

// Prime-order group abstraction. Every protocol module talks to Scalar and
// GroupElement only; the backend is the order-r subgroup G1 of BN254 (cofactor 1),
// used purely as a DDH group. No pairing is implemented.

namespace tidlab {

/// Canonical residue modulo the group order.
class Scalar
{
public:
  static constexpr std::size_t kEncodedSize = 32;

  Scalar() = default;

  static Scalar from_u64(std::uint64_t v);
  static Scalar from_field(Fr const &v);

  /// Reduces a 256-bit big-endian integer (e.g. a digest) modulo the order.
  static Scalar from_digest(Digest const &d);

  /// Near-uniform reduction of 512 bits of entropy.
  static Scalar from_wide_bytes(std::span<std::uint8_t const, 64> in);

  /// Throws Error(Decode) for wrong length or a value >= order.
  static Scalar decode(std::span<std::uint8_t const> in);
  static Scalar from_hex(std::string_view hex);

  void        encode_to(std::span<std::uint8_t, kEncodedSize> out) const;
  Bytes       encode() const;
  std::string to_hex() const;

  bool is_zero() const
  {
    return v_.is_zero();
  }

  Fr const &field() const
  {
    return v_;
  }

  Scalar operator+(Scalar const &o) const
  {
    return from_field(v_ + o.v_);
  }
  Scalar operator-(Scalar const &o) const
  {
    return from_field(v_ - o.v_);
  }
  Scalar operator*(Scalar const &o) const
  {
    return from_field(v_ * o.v_);
  }
  Scalar operator-() const
  {
    return from_field(-v_);
  }
  Scalar &operator+=(Scalar const &o)
  {
    v_ += o.v_;
    return *this;
  }
  Scalar &operator*=(Scalar const &o)
  {
    v_ *= o.v_;
    return *this;
  }

  /// Throws Error(Domain) when the value is zero.
  Scalar inverse() const;

  bool operator==(Scalar const &o) const = default;

  /// Orders by canonical value (for use as map keys).
  bool operator<(Scalar const &o) const;

private:
  Fr v_{};
};

enum class ScalarOp
{
  Add,
  Sub,
  Mul,
  Inv,
  Neg,
};

/// Field operation dispatcher; `b` is ignored for the unary ops.
Scalar scalar_arith(Scalar const &a, Scalar const &b, ScalarOp op);

/// Element of G1 held in Jacobian coordinates; encoded as affine (x, y), 2 x 32 bytes.
/// The identity encodes as 64 zero bytes.
class GroupElement
{
public:
  static constexpr std::size_t kEncodedSize = 64;

  GroupElement() = default;  // identity

  static GroupElement identity()
  {
    return {};
  }
  static GroupElement generator();

  /// Validity-checked decode: canonical coordinates on the curve, or all-zero.
  static GroupElement decode(std::span<std::uint8_t const> in);
  static GroupElement from_hex(std::string_view hex);

  void        encode_to(std::span<std::uint8_t, kEncodedSize> out) const;
  Bytes       encode() const;
  std::string to_hex() const;

  bool is_identity() const
  {
    return z_.is_zero();
  }

  GroupElement inverse() const;

  bool operator==(GroupElement const &o) const;

private:
  friend struct PointOps;

  Fq x_{};
  Fq y_{};
  Fq z_{};
};

/// Order p and generator g, with the primality of p and the order of g verified once
/// on first access.
struct GroupContext
{
  std::string_view name;
  Fr::Limbs        order;
  GroupElement     generator;
};

GroupContext const &group_context();

/// base^e. Counts one exponentiation on the active meter.
GroupElement group_exp(GroupElement const &base, Scalar const &e);

/// g^e using a precomputed fixed-base table. Counts one exponentiation.
GroupElement generator_exp(Scalar const &e);

/// x * y. Counts one combine.
GroupElement group_combine(GroupElement const &x, GroupElement const &y);

/// Deterministic, uniform over Z_p for a fixed seed.
Scalar random_scalar(std::span<std::uint8_t const> seed);

/// SHA-256 of `data` reduced modulo p. Counts one hash call.
Scalar hash_to_scalar(std::span<std::uint8_t const> data);

}  // namespace tidlab
