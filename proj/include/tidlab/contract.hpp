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

#include "tidlab/ledger.hpp"
#include "tidlab/protocol.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tidlab {

/// Threshold as a fraction of the registered council: t = ceil(num * n / den) - 1.
struct ThresholdRatio
{
  std::uint32_t num{1};
  std::uint32_t den{2};

  std::size_t threshold_for(std::size_t n) const;
  std::string to_string() const;

  /// Parses "a/b" with 0 < a <= b. Throws Error(Parse).
  static ThresholdRatio parse(std::string_view text);

  bool operator==(ThresholdRatio const &) const = default;
};

/// Write-once deployment settings. Phase windows are half-open in block height:
/// Registration [deploy, registration_end), ShareDistribution [registration_end,
/// distribution_end), Dispute [distribution_end, dispute_end), Reconstruction from
/// dispute_end on.
struct ContractConfig
{
  ThresholdRatio ratio;
  std::uint64_t  registration_end{0};
  std::uint64_t  distribution_end{0};
  std::uint64_t  dispute_end{0};
  std::uint64_t  delta_hold{0};
  std::uint64_t  deposit{0};
  Bytes          instance_id;
};

struct MemberRecord
{
  AccountId                            account;
  GroupElement                         channel_pk;
  std::optional<GroupElement>          pk;
  std::optional<Digest>                broadcast_digest;
  bool                                 qualified{true};
  std::optional<DisqualificationCause> disqualified_for;
};

struct RevealedSecret
{
  Scalar sk;
  Scalar share;
};

/**
 * The TID coordinator. Stores only digests of the share broadcasts, arbitrates
 * disputes, publishes mpk from qualified contributions and accepts msk once it
 * matches mpk.
 */
class TidContract : public Coordinator
{
public:
  /// Throws Error(Invariant) if the schedule is not strictly increasing.
  explicit TidContract(ContractConfig config);

  bool    has_pending_deadlines(std::uint64_t height) const override;
  Outcome process_deadlines(ExecutionContext &ctx) override;
  Outcome execute(ExecutionContext &ctx, Transaction const &tx) override;

  ContractConfig const &config() const
  {
    return config_;
  }
  Phase phase() const
  {
    return phase_;
  }
  std::vector<Phase> const &phase_history() const
  {
    return phase_history_;
  }

  std::size_t n() const
  {
    return members_.size();
  }
  /// Known once registration has closed.
  std::optional<std::size_t> threshold() const
  {
    return threshold_;
  }

  std::map<MemberIndex, MemberRecord> const &members() const
  {
    return members_;
  }
  std::optional<MemberIndex> index_of(AccountId account) const;
  std::vector<MemberIndex>   qualified_indices() const;

  std::optional<GroupElement> const &mpk() const
  {
    return mpk_;
  }
  std::optional<Scalar> const &msk() const
  {
    return msk_;
  }
  std::optional<std::uint64_t> const &recon_begin() const
  {
    return recon_begin_;
  }
  std::map<MemberIndex, RevealedSecret> const &revealed() const
  {
    return revealed_;
  }

private:
  Outcome deploy(ExecutionContext &ctx);
  Outcome register_member(ExecutionContext &ctx, Transaction const &tx);
  Outcome distribute_shares(ExecutionContext &ctx, Transaction const &tx);
  Outcome submit_dispute(ExecutionContext &ctx, Transaction const &tx);
  Outcome generate_mpk(ExecutionContext &ctx);
  Outcome submit_secret(ExecutionContext &ctx, Transaction const &tx);
  Outcome submit_msk(ExecutionContext &ctx, Transaction const &tx);

  void enter(Phase p, Outcome &out);
  void disqualify(ExecutionContext &ctx, MemberIndex index, DisqualificationCause cause,
                  Outcome &out);
  void abort_if_below_threshold(ExecutionContext &ctx, Outcome &out);
  void refund_qualified(ExecutionContext &ctx, Outcome &out);

  ContractConfig const                  config_;
  Phase                                 phase_{Phase::Setup};
  std::vector<Phase>                    phase_history_{Phase::Setup};
  std::map<MemberIndex, MemberRecord>   members_;
  std::map<AccountId, MemberIndex>      by_account_;
  std::optional<std::size_t>            threshold_;
  std::optional<GroupElement>           mpk_;
  std::optional<Scalar>                 msk_;
  std::optional<std::uint64_t>          recon_begin_;
  std::map<MemberIndex, RevealedSecret> revealed_;
};

}  // namespace tidlab
