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

#include "tidlab/channel.hpp"
#include "tidlab/contract.hpp"
#include "tidlab/ledger.hpp"
#include "tidlab/random.hpp"
#include "tidlab/sharing.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tidlab {

enum class StrategyKind
{
  Honest,
  InvalidShadow,            // corrupts the shadow sent to `target`
  SilentAfterRegistration,  // registers, then never acts again
  SilentInReconstruction,   // behaves honestly but never reveals
  Biasing,                  // distributes last, with sk = bias
};

struct Strategy
{
  StrategyKind kind{StrategyKind::Honest};
  MemberIndex  target{0};
  Scalar       bias;

  static Strategy honest()
  {
    return {};
  }
  static Strategy invalid_shadow(MemberIndex target)
  {
    return {StrategyKind::InvalidShadow, target, {}};
  }
  static Strategy silent_after_registration()
  {
    return {StrategyKind::SilentAfterRegistration, 0, {}};
  }
  static Strategy silent_in_reconstruction()
  {
    return {StrategyKind::SilentInReconstruction, 0, {}};
  }
  static Strategy biasing(Scalar const &b)
  {
    return {StrategyKind::Biasing, 0, b};
  }

  bool reveals() const
  {
    return kind != StrategyKind::SilentAfterRegistration &&
           kind != StrategyKind::SilentInReconstruction;
  }

  std::string describe() const;
};

/// What a member can observe: public contract storage and the transaction log.
struct LedgerView
{
  std::uint64_t                height{0};
  TidContract const           &contract;
  std::vector<LogEntry> const &log;
};

struct ReceivedShadow
{
  MemberIndex sender{0};
  Scalar      value;
  bool        valid{false};
};

struct DisputeIntent
{
  MemberIndex accused{0};
  DisputeArgs args;
};

/// Scheduling decisions made by the harness rather than by the protocol.
struct Duties
{
  bool generate_mpk{false};
  bool reveal{true};
};

/**
 * One council member's client state.
 *
 * Keys and the polynomial come from `rng`; all messages are read back from the ledger
 * log, never passed directly between sessions.
 */
class MemberSession
{
public:
  MemberSession(Strategy strategy, Drbg rng);

  void bind_account(AccountId account)
  {
    account_ = account;
  }
  AccountId account() const
  {
    return account_;
  }

  Strategy const &strategy() const
  {
    return strategy_;
  }
  ChannelKeyPair const &channel() const
  {
    return channel_;
  }

  /// Known once the registration is seen in the contract.
  std::optional<MemberIndex> index() const
  {
    return index_;
  }

  /// Transactions the strategy prescribes right now. Calling again without a state
  /// change emits nothing new.
  std::vector<Transaction> run_phase(LedgerView const &view, Duties const &duties);

  /// Decrypts and checks every shadow addressed to this member in accepted broadcasts,
  /// returning a dispute for each one that fails the check.
  std::vector<DisputeIntent> validate_inbox(LedgerView const &view);

  /// A dispute against `accused` regardless of whether its shadow is actually bad.
  DisputeIntent build_dispute(LedgerView const &view, MemberIndex accused);

  std::map<MemberIndex, ReceivedShadow> const &received() const
  {
    return received_;
  }

  /// Secret contribution, once the polynomial is sampled.
  std::optional<Scalar> secret() const;

  /// Aggregated share over the qualified senders; computed in Reconstruction.
  std::optional<Share> const &share() const
  {
    return share_;
  }

  /// Product of the other members' pk_i as seen by a biasing member just before it
  /// chose its own contribution.
  std::optional<GroupElement> const &observed_partial_mpk() const
  {
    return observed_partial_mpk_;
  }

private:
  std::optional<Transaction> distribute(LedgerView const &view);
  SymmetricKey const        &key_with(MemberIndex other, LedgerView const &view);
  void                       aggregate(LedgerView const &view);

  Strategy                           strategy_;
  Drbg                               rng_;
  ChannelKeyPair                     channel_;
  AccountId                          account_;
  std::optional<MemberIndex>         index_;
  std::optional<SharingPolynomial>   poly_;
  std::map<MemberIndex, SymmetricKey> keys_;
  std::map<MemberIndex, ReceivedShadow> received_;
  std::map<MemberIndex, bool>        disputed_;
  std::optional<Share>               share_;
  std::optional<GroupElement>        observed_partial_mpk_;

  bool registered_{false};
  bool distributed_{false};
  bool requested_mpk_{false};
  bool revealed_{false};
};

/// Accepted distribute_shares payloads by sender index, read from the log.
std::map<MemberIndex, Bytes> collect_broadcasts(LedgerView const &view);

/// Lagrange interpolation at zero over the first t+1 shares by index.
/// Throws Error(Reconstruction) with fewer than t+1 shares.
Scalar reconstruct_msk(std::vector<IndexedShare> revealed, std::size_t t);

}  // namespace tidlab
