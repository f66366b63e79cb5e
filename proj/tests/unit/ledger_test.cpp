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
#include "tidlab/ledger.hpp"
#include "tidlab/meter.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <sstream>

using namespace tidlab;

namespace {

// Accepts any non-empty payload; one deadline at height 10 that emits a phase event.
class ToyCoordinator : public Coordinator
{
public:
  bool has_pending_deadlines(std::uint64_t height) const override
  {
    return !closed_ && height >= 10;
  }
  Outcome process_deadlines(ExecutionContext &) override
  {
    closed_     = true;
    Outcome out = Outcome::ok();
    out.events.emplace_back(events::PhaseEntered{Phase::Dispute});
    return out;
  }
  Outcome execute(ExecutionContext &ctx, Transaction const &tx) override
  {
    ++calls;
    if (tx.payload.empty())
    {
      return Outcome::reject(RejectReason::BadArity);
    }
    metering::count_exp();
    metering::count_stored_words(1);
    if (tx.value != 0)
    {
      ctx.balances.hold(ctx.sender, tx.value);
    }
    last_height = ctx.height;
    return Outcome::ok();
  }

  bool          closed_{false};
  int           calls{0};
  std::uint64_t last_height{0};
};

Transaction tx_with(std::size_t payload_bytes, std::uint64_t value = 0)
{
  return Transaction{Function::Register, Bytes(payload_bytes, 0xab), value};
}

}  // namespace

TEST_CASE("block clock", "[ledger]")
{
  ToyCoordinator c;
  Ledger         l{c};
  CHECK(l.height() == 0);
  CHECK(l.advance_blocks(5) == 5);
  Ledger l2{c};
  l2.advance_blocks(3);
  CHECK(l2.advance_blocks(4) == 7);
  CHECK_THROWS_AS(l.advance_blocks(0), Error);
  CHECK(l.height() == 5);
  CHECK(c.calls == 0);
}

TEST_CASE("transactions are logged with their meter", "[ledger]")
{
  ToyCoordinator c;
  Ledger         l{c};
  AccountId      a = l.open_account(100);
  CHECK(a.value == 1);
  CHECK(l.open_account(0).value == 2);
  CHECK_FALSE(l.has_account(kSystemAccount));
  CHECK_THROWS_AS(l.submit_transaction(AccountId{9}, tx_with(32)), Error);

  Outcome ok = l.submit_transaction(a, tx_with(96));
  CHECK(ok.accepted);
  Outcome bad = l.submit_transaction(a, tx_with(0));
  CHECK_FALSE(bad.accepted);
  CHECK(bad.reason == RejectReason::BadArity);

  REQUIRE(l.log().size() == 2);
  CHECK(l.log()[0].meter.payload_words == 3);
  CHECK(l.log()[0].meter.group_exps == 1);
  CHECK(l.log()[0].meter.stored_words == 1);
  CHECK(l.log()[1].meter.group_exps == 0);
  CHECK_FALSE(l.log()[1].outcome.accepted);
}

TEST_CASE("passed deadlines are processed in their own entry", "[ledger]")
{
  ToyCoordinator c;
  Ledger         l{c};
  AccountId      a = l.open_account(0);
  l.advance_blocks(9);
  l.submit_transaction(a, tx_with(32));
  CHECK(l.log().size() == 1);
  l.advance_blocks(1);
  l.submit_transaction(a, tx_with(0));
  REQUIRE(l.log().size() == 3);
  CHECK(l.log()[1].tx.function == Function::Sync);
  CHECK(l.log()[1].sender == kSystemAccount);
  CHECK(l.log()[1].height == 10);
  CHECK(l.log()[1].outcome.events.size() == 1);
  CHECK_FALSE(l.sync());
}

TEST_CASE("balances hold, slash and refund", "[ledger]")
{
  Balances b;
  AccountId const x{1}, y{2};
  b.mint(x, 100);
  b.mint(y, 50);
  b.hold(x, 40);
  CHECK(b.wallet(x) == 60);
  CHECK(b.escrowed(x) == 40);
  CHECK(b.conserved());
  CHECK_THROWS_AS(b.hold(x, 1), Error);
  CHECK_THROWS_AS(b.hold(y, 51), Error);

  CHECK(b.slash(x) == 40);
  CHECK(b.escrowed(x) == 0);
  CHECK(b.pool() == 40);
  CHECK_THROWS_AS(b.refund(x), Error);
  CHECK_THROWS_AS(b.slash(x), Error);

  b.hold(y, 50);
  CHECK(b.refund(y) == 50);
  CHECK(b.wallet(y) == 50);
  CHECK_THROWS_AS(b.refund(y), Error);
  CHECK(b.minted() == 150);
  CHECK(b.conserved());
}

TEST_CASE("identical submissions replay identically", "[ledger]")
{
  auto run = [] {
    ToyCoordinator c;
    Ledger         l{c};
    AccountId      a = l.open_account(10);
    l.submit_transaction(a, tx_with(64, 5));
    l.advance_blocks(12);
    l.submit_transaction(a, tx_with(0));
    std::ostringstream out;
    write_log_jsonl(out, l.log());
    return out.str();
  };
  CHECK(run() == run());
}

TEST_CASE("log export", "[ledger]")
{
  ToyCoordinator c;
  Ledger         l{c};
  AccountId      a = l.open_account(10);
  l.submit_transaction(a, Transaction{Function::Register, Bytes{0x01, 0x02}, 3});
  std::ostringstream out;
  write_log_jsonl(out, l.log());
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["height"] == 0);
  CHECK(j["sender"] == 1);
  CHECK(j["function"] == "register");
  CHECK(j["value"] == 3);
  CHECK(j["payload"] == "0102");
  CHECK(j["accepted"] == true);
  CHECK(j["meter"]["group_exps"] == 1);
  CHECK(j["meter"]["payload_words"] == 0);
}
