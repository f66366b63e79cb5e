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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

namespace tidlab {
namespace detail {

using Limbs = std::array<std::uint64_t, 4>;
using u128  = unsigned __int128;

// Little-endian limb arithmetic helpers shared by both BN254 fields.

inline bool limbs_less(Limbs const &a, Limbs const &b)
{
  for (std::size_t i = 4; i-- > 0;)
  {
    if (a[i] != b[i])
    {
      return a[i] < b[i];
    }
  }
  return false;
}

inline std::uint64_t limbs_sub(Limbs &a, Limbs const &b)
{
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < 4; ++i)
  {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    a[i]   = static_cast<std::uint64_t>(d);
    borrow = static_cast<std::uint64_t>(d >> 64) & 1u;
  }
  return borrow;
}

inline std::uint64_t limbs_add(Limbs &a, Limbs const &b)
{
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < 4; ++i)
  {
    u128 s = static_cast<u128>(a[i]) + b[i] + carry;
    a[i]   = static_cast<std::uint64_t>(s);
    carry  = static_cast<std::uint64_t>(s >> 64);
  }
  return carry;
}

}  // namespace detail

/**
 * Element of a 254-bit prime field, kept in Montgomery form (R = 2^256).
 *
 * Params supplies `modulus`, `inv` (-modulus^-1 mod 2^64), `r2` (R^2 mod modulus)
 * and `one` (R mod modulus), all little-endian limbs.
 */
template <typename Params>
class MontgomeryField
{
public:
  using Limbs = detail::Limbs;

  constexpr MontgomeryField() = default;

  static MontgomeryField zero()
  {
    return {};
  }

  static MontgomeryField one()
  {
    MontgomeryField r;
    r.mont_ = Params::one;
    return r;
  }

  static MontgomeryField from_u64(std::uint64_t v)
  {
    return from_canonical(Limbs{v, 0, 0, 0});
  }

  // `v` must already be < modulus.
  static MontgomeryField from_canonical(Limbs const &v)
  {
    MontgomeryField r;
    r.mont_ = v;
    r.mont_ = mul_raw(r.mont_, Params::r2);
    return r;
  }

  // Any 256-bit value, reduced by repeated subtraction (the moduli are > 2^253).
  static MontgomeryField from_wide(Limbs v)
  {
    while (!detail::limbs_less(v, Params::modulus))
    {
      detail::limbs_sub(v, Params::modulus);
    }
    return from_canonical(v);
  }

  // Big-endian 32 bytes. Returns false if the value is not canonical.
  static bool from_bytes(std::span<std::uint8_t const, 32> in, MontgomeryField &out)
  {
    Limbs v{};
    for (std::size_t i = 0; i < 32; ++i)
    {
      v[3 - i / 8] |= static_cast<std::uint64_t>(in[i]) << (8 * (7 - i % 8));
    }
    if (!detail::limbs_less(v, Params::modulus))
    {
      return false;
    }
    out = from_canonical(v);
    return true;
  }

  static constexpr Limbs modulus()
  {
    return Params::modulus;
  }

  Limbs canonical() const
  {
    return mul_raw(mont_, Limbs{1, 0, 0, 0});
  }

  void to_bytes(std::span<std::uint8_t, 32> out) const
  {
    Limbs v = canonical();
    for (std::size_t i = 0; i < 32; ++i)
    {
      out[i] = static_cast<std::uint8_t>(v[3 - i / 8] >> (8 * (7 - i % 8)));
    }
  }

  bool is_zero() const
  {
    return (mont_[0] | mont_[1] | mont_[2] | mont_[3]) == 0;
  }

  MontgomeryField operator+(MontgomeryField const &o) const
  {
    MontgomeryField r = *this;
    std::uint64_t   c = detail::limbs_add(r.mont_, o.mont_);
    if (c != 0 || !detail::limbs_less(r.mont_, Params::modulus))
    {
      detail::limbs_sub(r.mont_, Params::modulus);
    }
    return r;
  }

  MontgomeryField operator-(MontgomeryField const &o) const
  {
    MontgomeryField r = *this;
    if (detail::limbs_sub(r.mont_, o.mont_) != 0)
    {
      detail::limbs_add(r.mont_, Params::modulus);
    }
    return r;
  }

  MontgomeryField operator-() const
  {
    return zero() - *this;
  }

  MontgomeryField operator*(MontgomeryField const &o) const
  {
    MontgomeryField r;
    r.mont_ = mul_raw(mont_, o.mont_);
    return r;
  }

  MontgomeryField &operator+=(MontgomeryField const &o)
  {
    return *this = *this + o;
  }
  MontgomeryField &operator-=(MontgomeryField const &o)
  {
    return *this = *this - o;
  }
  MontgomeryField &operator*=(MontgomeryField const &o)
  {
    return *this = *this * o;
  }

  MontgomeryField square() const
  {
    return *this * *this;
  }

  // Exponent given as canonical little-endian limbs.
  MontgomeryField pow(Limbs const &e) const
  {
    MontgomeryField result = one();
    for (std::size_t i = 256; i-- > 0;)
    {
      result = result.square();
      if ((e[i / 64] >> (i % 64)) & 1u)
      {
        result = result * *this;
      }
    }
    return result;
  }

  // Fermat inverse; the caller checks for zero.
  MontgomeryField inverse() const
  {
    Limbs e = Params::modulus;
    detail::limbs_sub(e, Limbs{2, 0, 0, 0});
    return pow(e);
  }

  bool operator==(MontgomeryField const &o) const = default;

private:
  static Limbs mul_raw(Limbs const &a, Limbs const &b)
  {
    using detail::u128;
    // CIOS Montgomery multiplication.
    std::array<std::uint64_t, 6> t{};
    for (std::size_t i = 0; i < 4; ++i)
    {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < 4; ++j)
      {
        u128 cur = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
        t[j]     = static_cast<std::uint64_t>(cur);
        carry    = static_cast<std::uint64_t>(cur >> 64);
      }
      u128 top = static_cast<u128>(t[4]) + carry;
      t[4]     = static_cast<std::uint64_t>(top);
      t[5]     = static_cast<std::uint64_t>(top >> 64);

      std::uint64_t m   = t[0] * Params::inv;
      u128          red = static_cast<u128>(m) * Params::modulus[0] + t[0];
      carry             = static_cast<std::uint64_t>(red >> 64);
      for (std::size_t j = 1; j < 4; ++j)
      {
        u128 cur = static_cast<u128>(m) * Params::modulus[j] + t[j] + carry;
        t[j - 1] = static_cast<std::uint64_t>(cur);
        carry    = static_cast<std::uint64_t>(cur >> 64);
      }
      u128 cur = static_cast<u128>(t[4]) + carry;
      t[3]     = static_cast<std::uint64_t>(cur);
      t[4]     = t[5] + static_cast<std::uint64_t>(cur >> 64);
    }
    Limbs r{t[0], t[1], t[2], t[3]};
    if (t[4] != 0 || !detail::limbs_less(r, Params::modulus))
    {
      detail::limbs_sub(r, Params::modulus);
    }
    return r;
  }

  Limbs mont_{};
};

// BN254 base field (curve coordinates).
struct Bn254FqParams
{
  static constexpr detail::Limbs modulus{0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                         0xb85045b68181585dULL, 0x30644e72e131a029ULL};
  static constexpr std::uint64_t inv = 0x87d20782e4866389ULL;
  static constexpr detail::Limbs r2{0xf32cfc5b538afa89ULL, 0xb5e71911d44501fbULL,
                                    0x47ab1eff0a417ff6ULL, 0x06d89f71cab8351fULL};
  static constexpr detail::Limbs one{0xd35d438dc58f0d9dULL, 0x0a78eb28f5c70b3dULL,
                                     0x666ea36f7879462cULL, 0x0e0a77c19a07df2fULL};
};

// BN254 scalar field: the order of G1.
struct Bn254FrParams
{
  static constexpr detail::Limbs modulus{0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                         0xb85045b68181585dULL, 0x30644e72e131a029ULL};
  static constexpr std::uint64_t inv = 0xc2e1f593efffffffULL;
  static constexpr detail::Limbs r2{0x1bb8e645ae216da7ULL, 0x53fe3ab1e35c59e3ULL,
                                    0x8c49833d53bb8085ULL, 0x0216d0b17f4e44a5ULL};
  static constexpr detail::Limbs one{0xac96341c4ffffffbULL, 0x36fc76959f60cd29ULL,
                                     0x666ea36f7879462eULL, 0x0e0a77c19a07df2fULL};
};

using Fq = MontgomeryField<Bn254FqParams>;
using Fr = MontgomeryField<Bn254FrParams>;

}  // namespace tidlab
