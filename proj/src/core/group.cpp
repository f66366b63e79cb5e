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

#include "tidlab/group.hpp"

#include "tidlab/error.hpp"
#include "tidlab/meter.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace tidlab {

// --- Scalar -----------------------------------------------------------------

Scalar Scalar::from_u64(std::uint64_t v)
{
  return from_field(Fr::from_u64(v));
}

Scalar Scalar::from_field(Fr const &v)
{
  Scalar s;
  s.v_ = v;
  return s;
}

namespace {

detail::Limbs limbs_from_be(std::span<std::uint8_t const, 32> in)
{
  detail::Limbs v{};
  for (std::size_t i = 0; i < 32; ++i)
  {
    v[3 - i / 8] |= static_cast<std::uint64_t>(in[i]) << (8 * (7 - i % 8));
  }
  return v;
}

}  // namespace

Scalar Scalar::from_digest(Digest const &d)
{
  return from_field(Fr::from_wide(limbs_from_be(d)));
}

Scalar Scalar::from_wide_bytes(std::span<std::uint8_t const, 64> in)
{
  // hi * 2^256 + lo  (mod p)
  Fr hi = Fr::from_wide(limbs_from_be(in.subspan<0, 32>()));
  Fr lo = Fr::from_wide(limbs_from_be(in.subspan<32, 32>()));

  detail::Limbs two_256 = Bn254FrParams::one;  // R mod p is 2^256 mod p
  return from_field(hi * Fr::from_canonical(two_256) + lo);
}

Scalar Scalar::decode(std::span<std::uint8_t const> in)
{
  if (in.size() != kEncodedSize)
  {
    throw Error(ErrorKind::Decode, "scalar encoding must be 32 bytes");
  }
  Fr v;
  if (!Fr::from_bytes(in.first<32>(), v))
  {
    throw Error(ErrorKind::Decode, "scalar is not reduced modulo the group order");
  }
  return from_field(v);
}

Scalar Scalar::from_hex(std::string_view hex)
{
  return decode(tidlab::from_hex(hex));
}

void Scalar::encode_to(std::span<std::uint8_t, kEncodedSize> out) const
{
  v_.to_bytes(out);
}

Bytes Scalar::encode() const
{
  Bytes out(kEncodedSize);
  encode_to(std::span<std::uint8_t, kEncodedSize>{out.data(), kEncodedSize});
  return out;
}

std::string Scalar::to_hex() const
{
  return tidlab::to_hex(encode());
}

Scalar Scalar::inverse() const
{
  if (v_.is_zero())
  {
    throw Error(ErrorKind::Domain, "inverse of zero scalar");
  }
  return from_field(v_.inverse());
}

bool Scalar::operator<(Scalar const &o) const
{
  return detail::limbs_less(v_.canonical(), o.v_.canonical());
}

Scalar scalar_arith(Scalar const &a, Scalar const &b, ScalarOp op)
{
  switch (op)
  {
  case ScalarOp::Add:
    return a + b;
  case ScalarOp::Sub:
    return a - b;
  case ScalarOp::Mul:
    return a * b;
  case ScalarOp::Inv:
    return a.inverse();
  case ScalarOp::Neg:
    return -a;
  }
  throw Error(ErrorKind::Domain, "unknown scalar operation");
}

// --- Curve arithmetic --------------------------------------------------------
//
// y^2 = x^3 + 3 over Fq. Jacobian (X, Y, Z) represents (X/Z^2, Y/Z^3); Z = 0 is the
// point at infinity.

struct AffinePoint
{
  Fq   x;
  Fq   y;
  bool infinity{true};
};

struct PointOps
{
  static Fq const &b()
  {
    static Fq const three = Fq::from_u64(3);
    return three;
  }

  static GroupElement make(Fq const &x, Fq const &y, Fq const &z)
  {
    GroupElement p;
    p.x_ = x;
    p.y_ = y;
    p.z_ = z;
    return p;
  }

  static GroupElement from_affine(AffinePoint const &a)
  {
    if (a.infinity)
    {
      return {};
    }
    return make(a.x, a.y, Fq::one());
  }

  static AffinePoint to_affine(GroupElement const &p)
  {
    AffinePoint a;
    if (p.is_identity())
    {
      return a;
    }
    Fq zinv  = p.z_.inverse();
    Fq zinv2 = zinv.square();
    a.x      = p.x_ * zinv2;
    a.y      = p.y_ * zinv2 * zinv;
    a.infinity = false;
    return a;
  }

  // dbl-2009-l
  static GroupElement dbl(GroupElement const &p)
  {
    if (p.is_identity() || p.y_.is_zero())
    {
      return {};
    }
    Fq a  = p.x_.square();
    Fq bb = p.y_.square();
    Fq c  = bb.square();
    Fq d  = (p.x_ + bb).square() - a - c;
    d     = d + d;
    Fq e  = a + a + a;
    Fq f  = e.square();
    Fq x3 = f - d - d;
    Fq c8 = c + c;
    c8    = c8 + c8;
    c8    = c8 + c8;
    Fq y3 = e * (d - x3) - c8;
    Fq z3 = p.y_ * p.z_;
    z3    = z3 + z3;
    return make(x3, y3, z3);
  }

  // add-2007-bl
  static GroupElement add(GroupElement const &p, GroupElement const &q)
  {
    if (p.is_identity())
    {
      return q;
    }
    if (q.is_identity())
    {
      return p;
    }
    Fq z1z1 = p.z_.square();
    Fq z2z2 = q.z_.square();
    Fq u1   = p.x_ * z2z2;
    Fq u2   = q.x_ * z1z1;
    Fq s1   = p.y_ * q.z_ * z2z2;
    Fq s2   = q.y_ * p.z_ * z1z1;
    Fq h    = u2 - u1;
    Fq r    = s2 - s1;
    if (h.is_zero())
    {
      return r.is_zero() ? dbl(p) : GroupElement{};
    }
    r       = r + r;
    Fq h2   = h + h;
    Fq i    = h2.square();
    Fq j    = h * i;
    Fq v    = u1 * i;
    Fq x3   = r.square() - j - v - v;
    Fq s1j  = s1 * j;
    Fq y3   = r * (v - x3) - s1j - s1j;
    Fq z3   = ((p.z_ + q.z_).square() - z1z1 - z2z2) * h;
    return make(x3, y3, z3);
  }

  // madd-2007-bl, q affine
  static GroupElement add_mixed(GroupElement const &p, AffinePoint const &q)
  {
    if (q.infinity)
    {
      return p;
    }
    if (p.is_identity())
    {
      return from_affine(q);
    }
    Fq z1z1 = p.z_.square();
    Fq u2   = q.x * z1z1;
    Fq s2   = q.y * p.z_ * z1z1;
    Fq h    = u2 - p.x_;
    Fq r    = s2 - p.y_;
    if (h.is_zero())
    {
      return r.is_zero() ? dbl(p) : GroupElement{};
    }
    r       = r + r;
    Fq hh   = h.square();
    Fq i    = hh + hh;
    i       = i + i;
    Fq j    = h * i;
    Fq v    = p.x_ * i;
    Fq x3   = r.square() - j - v - v;
    Fq y1j  = p.y_ * j;
    Fq y3   = r * (v - x3) - y1j - y1j;
    Fq z3   = (p.z_ + h).square() - z1z1 - hh;
    return make(x3, y3, z3);
  }

  static bool on_curve(Fq const &x, Fq const &y)
  {
    return y.square() == x.square() * x + b();
  }

  static GroupElement negate(GroupElement const &p)
  {
    return make(p.x_, -p.y_, p.z_);
  }

  static bool equal(GroupElement const &p, GroupElement const &q)
  {
    if (p.is_identity() || q.is_identity())
    {
      return p.is_identity() && q.is_identity();
    }
    Fq z1z1 = p.z_.square();
    Fq z2z2 = q.z_.square();
    if (!(p.x_ * z2z2 == q.x_ * z1z1))
    {
      return false;
    }
    return p.y_ * z2z2 * q.z_ == q.y_ * z1z1 * p.z_;
  }

  // Plain double-and-add; cheaper than building a window table for tiny exponents such
  // as member indices.
  static GroupElement small_mul(GroupElement const &base, std::uint64_t k)
  {
    GroupElement acc;
    for (int bit = 63; bit >= 0; --bit)
    {
      acc = dbl(acc);
      if ((k >> bit) & 1u)
      {
        acc = add(acc, base);
      }
    }
    return acc;
  }

  // 4-bit fixed window, skipping leading zero nibbles so small exponents stay cheap.
  static GroupElement scalar_mul(GroupElement const &base, Fr::Limbs const &e)
  {
    if (e[1] == 0 && e[2] == 0 && e[3] == 0 && e[0] < (1u << 16))
    {
      return small_mul(base, e[0]);
    }
    std::array<GroupElement, 16> table;
    table[1] = base;
    for (std::size_t i = 2; i < 16; ++i)
    {
      table[i] = add(table[i - 1], base);
    }

    GroupElement acc;
    bool         started = false;
    for (std::size_t nib = 64; nib-- > 0;)
    {
      auto digit = static_cast<std::size_t>((e[nib / 16] >> (4 * (nib % 16))) & 0xf);
      if (started)
      {
        acc = dbl(dbl(dbl(dbl(acc))));
      }
      if (digit != 0)
      {
        acc     = started ? add(acc, table[digit]) : table[digit];
        started = true;
      }
    }
    return acc;
  }
};

namespace {

// table[i][d] = d * 16^i * G in affine form.
using FixedBaseTable = std::array<std::array<AffinePoint, 16>, 64>;

FixedBaseTable const &generator_table()
{
  static FixedBaseTable const table = [] {
    FixedBaseTable t{};
    GroupElement   window_base = GroupElement::generator();
    for (std::size_t i = 0; i < 64; ++i)
    {
      GroupElement acc;
      for (std::size_t d = 1; d < 16; ++d)
      {
        acc     = PointOps::add(acc, window_base);
        t[i][d] = PointOps::to_affine(acc);
      }
      window_base = PointOps::add(acc, window_base);  // 16 * previous
    }
    return t;
  }();
  return table;
}

bool miller_rabin_prime(Fr::Limbs const &n)
{
  // n - 1 = d * 2^s; arithmetic is carried out in the Montgomery field over n itself.
  Fr::Limbs d = n;
  detail::limbs_sub(d, Fr::Limbs{1, 0, 0, 0});
  std::size_t s = 0;
  while ((d[0] & 1u) == 0)
  {
    for (std::size_t i = 0; i < 4; ++i)
    {
      d[i] = (d[i] >> 1) | (i + 1 < 4 ? d[i + 1] << 63 : 0);
    }
    ++s;
  }
  Fr const one       = Fr::one();
  Fr const minus_one = -one;
  for (std::uint64_t witness : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
  {
    Fr x = Fr::from_u64(witness).pow(d);
    if (x == one || x == minus_one)
    {
      continue;
    }
    bool composite = true;
    for (std::size_t r = 1; r < s; ++r)
    {
      x = x.square();
      if (x == minus_one)
      {
        composite = false;
        break;
      }
    }
    if (composite)
    {
      return false;
    }
  }
  return true;
}

}  // namespace

// --- GroupElement -------------------------------------------------------------

GroupElement GroupElement::generator()
{
  return PointOps::make(Fq::from_u64(1), Fq::from_u64(2), Fq::one());
}

GroupElement GroupElement::decode(std::span<std::uint8_t const> in)
{
  if (in.size() != kEncodedSize)
  {
    throw Error(ErrorKind::Decode, "group element encoding must be 64 bytes");
  }
  if (std::all_of(in.begin(), in.end(), [](std::uint8_t b) { return b == 0; }))
  {
    return identity();
  }
  Fq x;
  Fq y;
  if (!Fq::from_bytes(in.subspan(0, 32).first<32>(), x) ||
      !Fq::from_bytes(in.subspan(32, 32).first<32>(), y))
  {
    throw Error(ErrorKind::Decode, "group element coordinate out of range");
  }
  // G1 has cofactor 1, so being on the curve is the full subgroup check.
  if (!PointOps::on_curve(x, y))
  {
    throw Error(ErrorKind::Decode, "group element is not on the curve");
  }
  return PointOps::make(x, y, Fq::one());
}

GroupElement GroupElement::from_hex(std::string_view hex)
{
  return decode(tidlab::from_hex(hex));
}

void GroupElement::encode_to(std::span<std::uint8_t, kEncodedSize> out) const
{
  AffinePoint a = PointOps::to_affine(*this);
  if (a.infinity)
  {
    std::fill(out.begin(), out.end(), std::uint8_t{0});
    return;
  }
  a.x.to_bytes(out.subspan<0, 32>());
  a.y.to_bytes(out.subspan<32, 32>());
}

Bytes GroupElement::encode() const
{
  Bytes out(kEncodedSize);
  encode_to(std::span<std::uint8_t, kEncodedSize>{out.data(), kEncodedSize});
  return out;
}

std::string GroupElement::to_hex() const
{
  return tidlab::to_hex(encode());
}

GroupElement GroupElement::inverse() const
{
  return PointOps::negate(*this);
}

bool GroupElement::operator==(GroupElement const &o) const
{
  return PointOps::equal(*this, o);
}

GroupContext const &group_context()
{
  static GroupContext const ctx = [] {
    GroupContext c{"bn254-g1", Bn254FrParams::modulus, GroupElement::generator()};
    if (!miller_rabin_prime(c.order))
    {
      throw Error(ErrorKind::Invariant, "group order is not prime");
    }
    if (c.generator.is_identity() ||
        !PointOps::scalar_mul(c.generator, c.order).is_identity())
    {
      throw Error(ErrorKind::Invariant, "generator does not have the group order");
    }
    return c;
  }();
  return ctx;
}

GroupElement group_exp(GroupElement const &base, Scalar const &e)
{
  metering::count_exp();
  return PointOps::scalar_mul(base, e.field().canonical());
}

GroupElement generator_exp(Scalar const &e)
{
  metering::count_exp();
  auto const     &table = generator_table();
  Fr::Limbs const k     = e.field().canonical();
  GroupElement    acc;
  for (std::size_t nib = 0; nib < 64; ++nib)
  {
    auto digit = static_cast<std::size_t>((k[nib / 16] >> (4 * (nib % 16))) & 0xf);
    if (digit != 0)
    {
      acc = PointOps::add_mixed(acc, table[nib][digit]);
    }
  }
  return acc;
}

GroupElement group_combine(GroupElement const &x, GroupElement const &y)
{
  metering::count_combine();
  return PointOps::add(x, y);
}

Scalar random_scalar(std::span<std::uint8_t const> seed)
{
  std::array<std::uint8_t, 64> wide{};
  for (std::uint8_t block = 0; block < 2; ++block)
  {
    Digest d = Hasher{}.update("tidlab/random_scalar").update(seed).update_u64(block).finalize();
    std::copy(d.begin(), d.end(), wide.begin() + 32 * block);
  }
  return Scalar::from_wide_bytes(wide);
}

Scalar hash_to_scalar(std::span<std::uint8_t const> data)
{
  return Scalar::from_digest(hash_digest(data));
}

}  // namespace tidlab
