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

#include "tidlab/protocol.hpp"

#include "tidlab/error.hpp"

#include <iterator>

namespace tidlab {

std::string_view function_name(Function f)
{
  switch (f)
  {
  case Function::Deploy:
    return "deploy";
  case Function::Register:
    return "register";
  case Function::DistributeShares:
    return "distribute_shares";
  case Function::SubmitDispute:
    return "submit_dispute";
  case Function::GenerateMpk:
    return "generate_mpk";
  case Function::SubmitSecret:
    return "submit_secret";
  case Function::SubmitMsk:
    return "submit_msk";
  case Function::Sync:
    return "sync";
  }
  return "unknown";
}

std::string_view event_name(Event const &ev)
{
  static constexpr std::string_view kNames[] = {
      "PhaseEntered",    "Registered",   "SharesDistributed", "MemberDisqualified",
      "DepositSlashed",  "DepositRefunded", "MpkPublished",   "SecretSubmitted",
      "MskAccepted",     "Aborted",
  };
  static_assert(std::size(kNames) == std::variant_size_v<Event>);
  return kNames[ev.index()];
}

std::string_view phase_name(Phase p)
{
  switch (p)
  {
  case Phase::Setup:
    return "Setup";
  case Phase::Registration:
    return "Registration";
  case Phase::ShareDistribution:
    return "ShareDistribution";
  case Phase::Dispute:
    return "Dispute";
  case Phase::Reconstruction:
    return "Reconstruction";
  case Phase::Aborted:
    return "Aborted";
  }
  return "unknown";
}

std::string_view reject_reason_name(RejectReason r)
{
  switch (r)
  {
  case RejectReason::None:
    return "ok";
  case RejectReason::WrongPhase:
    return "wrong_phase";
  case RejectReason::TooEarly:
    return "too_early";
  case RejectReason::NotMember:
    return "not_member";
  case RejectReason::NotQualified:
    return "not_qualified";
  case RejectReason::AlreadyRegistered:
    return "already_registered";
  case RejectReason::WrongDeposit:
    return "wrong_deposit";
  case RejectReason::InsufficientFunds:
    return "insufficient_funds";
  case RejectReason::BadArity:
    return "bad_arity";
  case RejectReason::InvalidEncoding:
    return "invalid_encoding";
  case RejectReason::AlreadyDistributed:
    return "already_distributed";
  case RejectReason::SelfDispute:
    return "self_dispute";
  case RejectReason::Moot:
    return "moot";
  case RejectReason::DigestMismatch:
    return "digest_mismatch";
  case RejectReason::InvalidProof:
    return "invalid_proof";
  case RejectReason::ShadowValid:
    return "shadow_valid";
  case RejectReason::AlreadyGenerated:
    return "already_generated";
  case RejectReason::AlreadySubmitted:
    return "already_submitted";
  case RejectReason::MskAlreadySet:
    return "msk_already_set";
  case RejectReason::MskMismatch:
    return "msk_mismatch";
  }
  return "unknown";
}

namespace {

void append(Bytes &out, Bytes const &b)
{
  out.insert(out.end(), b.begin(), b.end());
}

Bytes index_word(std::uint64_t v)
{
  Bytes w(32, 0);
  for (std::size_t i = 0; i < 8; ++i)
  {
    w[31 - i] = static_cast<std::uint8_t>(v >> (8 * i));
  }
  return w;
}

}  // namespace

Bytes SharesBroadcast::encode() const
{
  Bytes out;
  out.reserve(32 * encrypted_shadows.size() + 64 * (1 + commitments.size()));
  for (auto const &s : encrypted_shadows)
  {
    append(out, s.encode());
  }
  append(out, pk.encode());
  for (auto const &a : commitments)
  {
    append(out, a.encode());
  }
  return out;
}

SharesBroadcast SharesBroadcast::decode(std::span<std::uint8_t const> in, std::size_t n,
                                        std::size_t t)
{
  if (n == 0 || in.size() != encoded_size(n, t))
  {
    throw Error(ErrorKind::Decode, "shares broadcast has the wrong length");
  }
  SharesBroadcast b;
  std::size_t     off = 0;
  b.encrypted_shadows.reserve(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j, off += 32)
  {
    b.encrypted_shadows.push_back(Scalar::decode(in.subspan(off, 32)));
  }
  b.pk = GroupElement::decode(in.subspan(off, 64));
  off += 64;
  b.commitments.reserve(t);
  for (std::size_t k = 0; k < t; ++k, off += 64)
  {
    b.commitments.push_back(GroupElement::decode(in.subspan(off, 64)));
  }
  return b;
}

Transaction make_deploy()
{
  return {Function::Deploy, {}, 0};
}

Transaction make_register(GroupElement const &channel_pk, std::uint64_t deposit)
{
  return {Function::Register, channel_pk.encode(), deposit};
}

Transaction make_distribute_shares(SharesBroadcast const &broadcast)
{
  return {Function::DistributeShares, broadcast.encode(), 0};
}

Transaction make_dispute(DisputeArgs const &args)
{
  Bytes payload = index_word(args.accused);
  append(payload, args.broadcast);
  append(payload, args.key.value.encode());
  append(payload, args.proof.encode());
  return {Function::SubmitDispute, std::move(payload), 0};
}

Transaction make_generate_mpk()
{
  return {Function::GenerateMpk, {}, 0};
}

Transaction make_submit_secret(Scalar const &sk, Scalar const &share)
{
  Bytes payload = sk.encode();
  append(payload, share.encode());
  return {Function::SubmitSecret, std::move(payload), 0};
}

Transaction make_submit_msk(Scalar const &msk)
{
  return {Function::SubmitMsk, msk.encode(), 0};
}

MemberIndex peek_dispute_accused(std::span<std::uint8_t const> payload)
{
  if (payload.size() < 32)
  {
    throw Error(ErrorKind::Decode, "dispute payload too short");
  }
  for (std::size_t i = 0; i < 28; ++i)
  {
    if (payload[i] != 0)
    {
      throw Error(ErrorKind::Decode, "dispute accused index out of range");
    }
  }
  MemberIndex idx = 0;
  for (std::size_t i = 28; i < 32; ++i)
  {
    idx = (idx << 8) | payload[i];
  }
  return idx;
}

DisputeArgs decode_dispute(std::span<std::uint8_t const> payload, std::size_t n, std::size_t t)
{
  if (payload.size() != DisputeArgs::encoded_size(n, t))
  {
    throw Error(ErrorKind::Decode, "dispute payload has the wrong length");
  }
  DisputeArgs args;
  args.accused            = peek_dispute_accused(payload);
  std::size_t const bsize = SharesBroadcast::encoded_size(n, t);
  args.broadcast.assign(payload.begin() + 32, payload.begin() + 32 + static_cast<std::ptrdiff_t>(bsize));
  args.key.value = GroupElement::decode(payload.subspan(32 + bsize, 64));
  args.proof     = KeyCorrectnessProof::decode(payload.subspan(32 + bsize + 64, 64));
  return args;
}

}  // namespace tidlab
