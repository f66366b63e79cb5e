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
#include "tidlab/group.hpp"
#include "tidlab/sharing.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

// Wire-level vocabulary shared by the ledger, the coordinator and the members.

namespace tidlab {

struct AccountId
{
  std::uint32_t value{0};

  auto operator<=>(AccountId const &) const = default;
};

/// Sender of deadline bookkeeping entries.
inline constexpr AccountId kSystemAccount{0};

enum class Function
{
  Deploy,
  Register,
  DistributeShares,
  SubmitDispute,
  GenerateMpk,
  SubmitSecret,
  SubmitMsk,
  Sync,
};

std::string_view function_name(Function f);

enum class Phase
{
  Setup,
  Registration,
  ShareDistribution,
  Dispute,
  Reconstruction,
  Aborted,
};

std::string_view phase_name(Phase p);

/// A call into the coordinator: selector, fixed-width argument payload in the
/// interface's argument order, and attached deposit value.
struct Transaction
{
  Function      function{Function::Sync};
  Bytes         payload;
  std::uint64_t value{0};

  std::uint64_t payload_words() const
  {
    return payload.size() / 32;
  }
};

enum class RejectReason
{
  None,
  WrongPhase,
  TooEarly,
  NotMember,
  NotQualified,
  AlreadyRegistered,
  WrongDeposit,
  InsufficientFunds,
  BadArity,
  InvalidEncoding,
  AlreadyDistributed,
  SelfDispute,
  Moot,
  DigestMismatch,
  InvalidProof,
  ShadowValid,
  AlreadyGenerated,
  AlreadySubmitted,
  MskAlreadySet,
  MskMismatch,
};

std::string_view reject_reason_name(RejectReason r);

enum class DisqualificationCause
{
  Inactivity,
  InvalidShadow,
};

namespace events {

struct PhaseEntered
{
  Phase phase;
};
struct Registered
{
  MemberIndex index;
  AccountId   account;
};
struct SharesDistributed
{
  MemberIndex index;
  Digest      digest;
};
struct MemberDisqualified
{
  MemberIndex           index;
  DisqualificationCause cause;
};
struct DepositSlashed
{
  AccountId     account;
  std::uint64_t amount;
};
struct DepositRefunded
{
  AccountId     account;
  std::uint64_t amount;
};
struct MpkPublished
{
  GroupElement  mpk;
  std::uint64_t recon_begin;
};
struct SecretSubmitted
{
  MemberIndex index;
  Scalar      sk;
  Scalar      share;
};
struct MskAccepted
{
  Scalar msk;
};
struct Aborted
{
  std::size_t qualified;
};

}  // namespace events

using Event = std::variant<events::PhaseEntered, events::Registered, events::SharesDistributed,
                           events::MemberDisqualified, events::DepositSlashed,
                           events::DepositRefunded, events::MpkPublished,
                           events::SecretSubmitted, events::MskAccepted, events::Aborted>;

std::string_view event_name(Event const &ev);

struct Outcome
{
  bool               accepted{false};
  RejectReason       reason{RejectReason::None};
  std::vector<Event> events;

  static Outcome ok()
  {
    return {true, RejectReason::None, {}};
  }
  static Outcome reject(RejectReason r)
  {
    return {false, r, {}};
  }
};

// --- Payload codecs ----------------------------------------------------------

/// The distribute_shares arguments: n-1 encrypted shadows ordered by ascending
/// recipient (skipping the sender), pk_i, then A_{i,1..t}.
struct SharesBroadcast
{
  std::vector<Scalar>       encrypted_shadows;
  GroupElement              pk;
  std::vector<GroupElement> commitments;

  Bytes encode() const;

  /// Throws Error(Decode) on length mismatch or invalid elements.
  static SharesBroadcast decode(std::span<std::uint8_t const> in, std::size_t n, std::size_t t);

  static std::size_t encoded_size(std::size_t n, std::size_t t)
  {
    return 32 * ((n - 1) + 2 * (t + 1));
  }

  /// Position of recipient j's ciphertext in a broadcast from `sender`.
  static std::size_t slot_of(MemberIndex sender, MemberIndex recipient)
  {
    return recipient < sender ? recipient - 1 : recipient - 2;
  }
};

struct DisputeArgs
{
  MemberIndex         accused{0};
  Bytes               broadcast;  // raw distribute_shares payload of the accused
  SymmetricKey        key;
  KeyCorrectnessProof proof;

  static std::size_t encoded_size(std::size_t n, std::size_t t)
  {
    return 32 + SharesBroadcast::encoded_size(n, t) + GroupElement::kEncodedSize +
           KeyCorrectnessProof::kEncodedSize;
  }
};

Transaction make_deploy();
Transaction make_register(GroupElement const &channel_pk, std::uint64_t deposit);
Transaction make_distribute_shares(SharesBroadcast const &broadcast);
Transaction make_dispute(DisputeArgs const &args);
Transaction make_generate_mpk();
Transaction make_submit_secret(Scalar const &sk, Scalar const &share);
Transaction make_submit_msk(Scalar const &msk);

/// Reads the leading accused-index word of a dispute payload.
MemberIndex peek_dispute_accused(std::span<std::uint8_t const> payload);

/// Throws Error(Decode) on arity or encoding errors.
DisputeArgs decode_dispute(std::span<std::uint8_t const> payload, std::size_t n, std::size_t t);

}  // namespace tidlab
