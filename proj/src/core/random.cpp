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

#include "tidlab/random.hpp"

#include <algorithm>

namespace tidlab {

Drbg::Drbg(Bytes seed)
  : seed_{std::move(seed)}
{}

Drbg::Drbg(std::string_view seed)
  : seed_{seed.begin(), seed.end()}
{}

Drbg Drbg::fork(std::string_view label) const
{
  Digest d = Hasher{}.update("tidlab/fork").update(seed_).update(label).finalize();
  return Drbg{Bytes{d.begin(), d.end()}};
}

Drbg Drbg::fork(std::string_view label, std::uint64_t index) const
{
  Digest d =
      Hasher{}.update("tidlab/fork").update(seed_).update(label).update_u64(index).finalize();
  return Drbg{Bytes{d.begin(), d.end()}};
}

Scalar Drbg::next_scalar()
{
  Bytes input = seed_;
  for (std::size_t i = 0; i < 8; ++i)
  {
    input.push_back(static_cast<std::uint8_t>(counter_ >> (8 * (7 - i))));
  }
  ++counter_;
  return random_scalar(input);
}

Scalar Drbg::next_nonzero_scalar()
{
  Scalar s = next_scalar();
  while (s.is_zero())
  {
    s = next_scalar();
  }
  return s;
}

Bytes Drbg::next_bytes(std::size_t count)
{
  Bytes out;
  out.reserve(count);
  while (out.size() < count)
  {
    Digest d = Hasher{}.update("tidlab/bytes").update(seed_).update_u64(counter_++).finalize();
    std::size_t take = std::min<std::size_t>(d.size(), count - out.size());
    out.insert(out.end(), d.begin(), d.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return out;
}

}  // namespace tidlab
