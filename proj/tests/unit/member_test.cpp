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

#include "tidlab/error.hpp"
#include "tidlab/member.hpp"

#include "council_fixture.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace tidlab;
using namespace tidlab::testing;

TEST_CASE("honest broadcast shape", "[member]")
{
  Council c{honest(5)};
  c.act_all();
  c.advance_to(5);
  auto txs = c.members[2].run_phase(c.view(), {});
  REQUIRE(txs.size() == 1);
  CHECK(txs[0].function == Function::DistributeShares);
  std::size_t const t  = *c.contract.threshold();
  auto              bc = SharesBroadcast::decode(txs[0].payload, 5, t);
  CHECK(bc.encrypted_shadows.size() == 4);
  CHECK(bc.commitments.size() == t);
  CHECK(bc.pk == generator_exp(*c.members[2].secret()));
  CHECK(c.members[2].run_phase(c.view(), {}).empty());
}

TEST_CASE("strategies emit what they prescribe", "[member]")
{
  Council c{{Strategy::honest(), Strategy::silent_after_registration(),
             Strategy::silent_in_reconstruction(), Strategy::honest()}};
  c.act_all();
  c.advance_to(5);
  CHECK(c.members[1].run_phase(c.view(), {}).empty());
  c.act(0);
  c.act(2);
  c.act(3);
  c.advance_to(10);
  c.advance_to(15);
  c.act(0, Duties{true, false});
  c.advance_to(*c.contract.recon_begin());
  for (std::size_t k = 0; k < 4; ++k)
  {
    auto txs = c.members[k].run_phase(c.view(), {});
    bool reveals =
        std::any_of(txs.begin(), txs.end(), [](auto &tx) { return tx.function == Function::SubmitSecret; });
    CHECK(reveals == (k == 0 || k == 3));
  }
}

TEST_CASE("a corrupted shadow is seen only by its recipient", "[member]")
{
  Council c{{Strategy::honest(), Strategy::honest(), Strategy::honest(),
             Strategy::invalid_shadow(2), Strategy::honest()}};
  c.through_distribution();
  for (std::size_t k = 0; k < 5; ++k)
  {
    if (k == 3)
    {
      continue;
    }
    auto intents = c.members[k].validate_inbox(c.view());
    CHECK(intents.size() == (k == 1 ? 1u : 0u));
    for (auto const &[sender, rs] : c.members[k].received())
    {
      CHECK(rs.valid == !(sender == 4 && k == 1));
    }
  }
}

TEST_CASE("members dispute once and aggregate qualified shadows only", "[member]")
{
  Council c{{Strategy::invalid_shadow(2), Strategy::honest(), Strategy::honest(),
             Strategy::honest()}};
  c.through_distribution();
  c.act_all();
  CHECK_FALSE(c.contract.members().at(1).qualified);
  CHECK(c.members[1].run_phase(c.view(), {}).empty());

  c.advance_to(15);
  c.act(1, Duties{true, false});
  c.advance_to(*c.contract.recon_begin());
  c.act_all();
  CHECK(c.contract.revealed().size() == 3);
  REQUIRE(c.members[1].share());
  Scalar expected;
  for (auto const &[sender, rs] : c.members[1].received())
  {
    if (sender != 1)
    {
      expected = expected + rs.value;
    }
  }
  CHECK(c.members[1].share()->value == expected);
}

TEST_CASE("secrets stay out of pre-reveal traffic", "[member]")
{
  Council c{honest(4)};
  c.through_distribution();
  c.advance_to(15);
  c.act(0, Duties{true, false});
  c.advance_to(*c.contract.recon_begin());
  c.act_all();
  for (auto const &m : c.members)
  {
    Bytes const sk = m.secret()->encode();
    Bytes const sh = m.share()->value.encode();
    for (auto const &e : c.ledger.log())
    {
      if (e.tx.function == Function::SubmitSecret)
      {
        continue;
      }
      auto const &p = e.tx.payload;
      CHECK(std::search(p.begin(), p.end(), sk.begin(), sk.end()) == p.end());
      CHECK(std::search(p.begin(), p.end(), sh.begin(), sh.end()) == p.end());
    }
  }
}

TEST_CASE("biasing member shifts mpk by g^b", "[member]")
{
  Scalar const b = Scalar::from_u64(424242);
  Council      c{{Strategy::honest(), Strategy::honest(), Strategy::biasing(b)}};
  c.through_distribution();
  REQUIRE(c.members[2].observed_partial_mpk());
  CHECK(*c.members[2].secret() == b);
  c.advance_to(15);
  c.act(0, Duties{true, false});
  CHECK(*c.contract.mpk() ==
        group_combine(*c.members[2].observed_partial_mpk(), generator_exp(b)));
}

TEST_CASE("reconstruction from revealed shares", "[member]")
{
  Drbg              rng{"recon"};
  std::size_t const n = 9, t = 4;
  Scalar const      secret = rng.next_scalar();
  auto              p      = make_polynomial(secret, t, [&] { return rng.next_scalar(); });
  std::vector<IndexedShare> all;
  for (MemberIndex j = 1; j <= n; ++j)
  {
    all.push_back({j, p.evaluate(j)});
  }
  std::vector<IndexedShare> low{all.begin(), all.begin() + t + 1};
  std::vector<IndexedShare> high{all.end() - (t + 1), all.end()};
  CHECK(reconstruct_msk(low, t) == secret);
  CHECK(reconstruct_msk(high, t) == secret);
  std::reverse(all.begin(), all.end());
  CHECK(reconstruct_msk(all, t) == secret);

  // t + 1 = n: the only subset
  auto q = make_polynomial(secret, 2, [&] { return rng.next_scalar(); });
  CHECK(reconstruct_msk({{1, q.evaluate(1u)}, {2, q.evaluate(2u)}, {3, q.evaluate(3u)}}, 2) ==
        secret);

  std::vector<IndexedShare> few{all.begin(), all.begin() + t};
  few.push_back(few.front());
  try
  {
    reconstruct_msk(few, t);
    FAIL("expected reconstruction error");
  }
  catch (Error const &e)
  {
    CHECK(e.kind() == ErrorKind::Reconstruction);
  }
}

TEST_CASE("strategy descriptions", "[member]")
{
  CHECK(Strategy::honest().describe() == "honest");
  CHECK(Strategy::invalid_shadow(3).describe() == "invalid_shadow(3)");
  CHECK_FALSE(Strategy::silent_in_reconstruction().reveals());
  CHECK_FALSE(Strategy::silent_after_registration().reveals());
  CHECK(Strategy::biasing(Scalar::from_u64(1)).reveals());
}
