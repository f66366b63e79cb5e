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

#include "tidlab/ledger.hpp"

#include "tidlab/error.hpp"

#include <json.hpp>

#include <string>

namespace tidlab {

void Balances::mint(AccountId account, std::uint64_t amount)
{
  wallets_[account] += amount;
  minted_ += amount;
}

void Balances::hold(AccountId account, std::uint64_t amount)
{
  if (escrowed(account) != 0)
  {
    throw Error(ErrorKind::Ledger, "account already holds a deposit");
  }
  if (wallet(account) < amount)
  {
    throw Error(ErrorKind::Ledger, "insufficient funds for deposit");
  }
  wallets_[account] -= amount;
  escrow_[account] = amount;
}

std::uint64_t Balances::slash(AccountId account)
{
  auto it = escrow_.find(account);
  if (it == escrow_.end())
  {
    throw Error(ErrorKind::Ledger, "no live deposit to slash");
  }
  std::uint64_t amount = it->second;
  escrow_.erase(it);
  pool_ += amount;
  return amount;
}

std::uint64_t Balances::refund(AccountId account)
{
  auto it = escrow_.find(account);
  if (it == escrow_.end())
  {
    throw Error(ErrorKind::Ledger, "no live deposit to refund");
  }
  std::uint64_t amount = it->second;
  escrow_.erase(it);
  wallets_[account] += amount;
  return amount;
}

std::uint64_t Balances::wallet(AccountId account) const
{
  auto it = wallets_.find(account);
  return it == wallets_.end() ? 0 : it->second;
}

std::uint64_t Balances::escrowed(AccountId account) const
{
  auto it = escrow_.find(account);
  return it == escrow_.end() ? 0 : it->second;
}

bool Balances::conserved() const
{
  std::uint64_t total = pool_;
  for (auto const &[_, v] : wallets_)
  {
    total += v;
  }
  for (auto const &[_, v] : escrow_)
  {
    total += v;
  }
  return total == minted_;
}

Ledger::Ledger(Coordinator &coordinator)
  : coordinator_{coordinator}
{}

std::uint64_t Ledger::advance_blocks(std::uint64_t k)
{
  if (k == 0)
  {
    throw Error(ErrorKind::Ledger, "advance_blocks requires k >= 1");
  }
  height_ += k;
  return height_;
}

AccountId Ledger::open_account(std::uint64_t funds)
{
  AccountId id{next_account_++};
  balances_.mint(id, funds);
  return id;
}

bool Ledger::has_account(AccountId account) const
{
  return account.value != 0 && account.value < next_account_;
}

bool Ledger::sync()
{
  if (!coordinator_.has_pending_deadlines(height_))
  {
    return false;
  }
  LogEntry entry;
  entry.height = height_;
  entry.sender = kSystemAccount;
  entry.tx     = Transaction{Function::Sync, {}, 0};
  {
    MeterScope       scope{entry.meter};
    ExecutionContext ctx{height_, kSystemAccount, balances_};
    entry.outcome = coordinator_.process_deadlines(ctx);
  }
  log_.push_back(std::move(entry));
  return true;
}

Outcome Ledger::submit_transaction(AccountId sender, Transaction const &tx)
{
  if (!has_account(sender))
  {
    throw Error(ErrorKind::Ledger, "unknown sender account " + std::to_string(sender.value));
  }
  sync();

  LogEntry entry;
  entry.height = height_;
  entry.sender = sender;
  entry.tx     = tx;
  {
    MeterScope scope{entry.meter};
    metering::count_payload_words(tx.payload_words());
    ExecutionContext ctx{height_, sender, balances_};
    entry.outcome = coordinator_.execute(ctx, tx);
  }
  Outcome result = entry.outcome;
  log_.push_back(std::move(entry));
  return result;
}

namespace {

nlohmann::ordered_json event_json(Event const &ev)
{
  using nlohmann::ordered_json;
  return std::visit(
      [](auto const &e) -> ordered_json {
        using T = std::decay_t<decltype(e)>;
        ordered_json j;
        if constexpr (std::is_same_v<T, events::PhaseEntered>)
        {
          j["event"] = "PhaseEntered";
          j["phase"] = phase_name(e.phase);
        }
        else if constexpr (std::is_same_v<T, events::Registered>)
        {
          j["event"]   = "Registered";
          j["index"]   = e.index;
          j["account"] = e.account.value;
        }
        else if constexpr (std::is_same_v<T, events::SharesDistributed>)
        {
          j["event"]  = "SharesDistributed";
          j["index"]  = e.index;
          j["digest"] = to_hex(e.digest);
        }
        else if constexpr (std::is_same_v<T, events::MemberDisqualified>)
        {
          j["event"] = "MemberDisqualified";
          j["index"] = e.index;
          j["cause"] =
              e.cause == DisqualificationCause::Inactivity ? "inactivity" : "invalid_shadow";
        }
        else if constexpr (std::is_same_v<T, events::DepositSlashed>)
        {
          j["event"]   = "DepositSlashed";
          j["account"] = e.account.value;
          j["amount"]  = e.amount;
        }
        else if constexpr (std::is_same_v<T, events::DepositRefunded>)
        {
          j["event"]   = "DepositRefunded";
          j["account"] = e.account.value;
          j["amount"]  = e.amount;
        }
        else if constexpr (std::is_same_v<T, events::MpkPublished>)
        {
          j["event"]       = "MpkPublished";
          j["mpk"]         = e.mpk.to_hex();
          j["recon_begin"] = e.recon_begin;
        }
        else if constexpr (std::is_same_v<T, events::SecretSubmitted>)
        {
          j["event"] = "SecretSubmitted";
          j["index"] = e.index;
          j["sk"]    = e.sk.to_hex();
          j["share"] = e.share.to_hex();
        }
        else if constexpr (std::is_same_v<T, events::MskAccepted>)
        {
          j["event"] = "MskAccepted";
          j["msk"]   = e.msk.to_hex();
        }
        else if constexpr (std::is_same_v<T, events::Aborted>)
        {
          j["event"]     = "Aborted";
          j["qualified"] = e.qualified;
        }
        return j;
      },
      ev);
}

}  // namespace

void write_log_jsonl(std::ostream &out, std::vector<LogEntry> const &log)
{
  for (auto const &entry : log)
  {
    nlohmann::ordered_json j;
    j["height"]   = entry.height;
    j["sender"]   = entry.sender.value;
    j["function"] = function_name(entry.tx.function);
    j["value"]    = entry.tx.value;
    j["payload"]  = to_hex(entry.tx.payload);
    j["accepted"] = entry.outcome.accepted;
    j["reason"]   = reject_reason_name(entry.outcome.reason);
    auto evs      = nlohmann::ordered_json::array();
    for (auto const &ev : entry.outcome.events)
    {
      evs.push_back(event_json(ev));
    }
    j["events"] = std::move(evs);
    j["meter"]  = {{"group_exps", entry.meter.group_exps},
                   {"group_combines", entry.meter.group_combines},
                   {"hash_calls", entry.meter.hash_calls},
                   {"stored_words", entry.meter.stored_words},
                   {"payload_words", entry.meter.payload_words}};
    out << j.dump() << '\n';
  }
}

}  // namespace tidlab
