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

#include "tidlab/meter.hpp"
#include "tidlab/protocol.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

namespace tidlab {

/// Wallets, escrowed deposits and the slash pool. Every movement preserves
/// sum(wallets) + sum(escrow) + pool == minted.
class Balances
{
public:
  void mint(AccountId account, std::uint64_t amount);

  /// Moves `amount` from the wallet into escrow. Throws Error(Ledger) if the wallet is
  /// short or a deposit is already held.
  void hold(AccountId account, std::uint64_t amount);

  /// Escrow -> pool / escrow -> wallet. Throws Error(Ledger) without a live deposit.
  std::uint64_t slash(AccountId account);
  std::uint64_t refund(AccountId account);

  std::uint64_t wallet(AccountId account) const;
  std::uint64_t escrowed(AccountId account) const;
  std::uint64_t pool() const
  {
    return pool_;
  }
  std::uint64_t minted() const
  {
    return minted_;
  }
  bool conserved() const;

  bool operator==(Balances const &) const = default;

private:
  std::map<AccountId, std::uint64_t> wallets_;
  std::map<AccountId, std::uint64_t> escrow_;
  std::uint64_t                      pool_{0};
  std::uint64_t                      minted_{0};
};

struct ExecutionContext
{
  std::uint64_t height;
  AccountId     sender;
  Balances     &balances;
};

/// State machine the ledger dispatches to.
class Coordinator
{
public:
  virtual ~Coordinator() = default;

  /// True when a schedule deadline has passed that has not yet been acted on.
  virtual bool    has_pending_deadlines(std::uint64_t height) const = 0;
  virtual Outcome process_deadlines(ExecutionContext &ctx)          = 0;
  virtual Outcome execute(ExecutionContext &ctx, Transaction const &tx) = 0;
};

struct LogEntry
{
  std::uint64_t height{0};
  AccountId     sender;
  Transaction   tx;
  Outcome       outcome;
  CostMeter     meter;
};

/**
 * Deterministic single-threaded chain: a block-height clock, a totally ordered
 * transaction log, and balances.
 *
 * Before dispatching a transaction, any passed deadline is processed first and logged
 * as a separate `sync` entry from the system account, so a rejected transaction never
 * changes state. Rejected transactions are still logged with their meter.
 */
class Ledger
{
public:
  explicit Ledger(Coordinator &coordinator);

  std::uint64_t height() const
  {
    return height_;
  }

  /// Throws Error(Ledger) for k == 0.
  std::uint64_t advance_blocks(std::uint64_t k);

  AccountId open_account(std::uint64_t funds);
  bool      has_account(AccountId account) const;

  /// Throws Error(Ledger) for an unknown sender.
  Outcome submit_transaction(AccountId sender, Transaction const &tx);

  /// Processes passed deadlines without submitting a transaction. Returns false if
  /// there was nothing to do.
  bool sync();

  std::vector<LogEntry> const &log() const
  {
    return log_;
  }

  Balances const &balances() const
  {
    return balances_;
  }

private:
  Coordinator          &coordinator_;
  std::uint64_t         height_{0};
  std::uint32_t         next_account_{1};
  Balances              balances_;
  std::vector<LogEntry> log_;
};

/// One JSON object per line: height, sender, function, value, payload (hex), accepted,
/// reason, events, meter.
void write_log_jsonl(std::ostream &out, std::vector<LogEntry> const &log);

}  // namespace tidlab
