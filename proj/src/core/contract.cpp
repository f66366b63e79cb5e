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

#include "tidlab/contract.hpp"

#include "tidlab/error.hpp"
#include "tidlab/meter.hpp"

#include <charconv>

namespace tidlab {

std::size_t ThresholdRatio::threshold_for(std::size_t n) const
{
  std::uint64_t const scaled = static_cast<std::uint64_t>(num) * n;
  std::uint64_t const ceil   = (scaled + den - 1) / den;
  return ceil == 0 ? 0 : static_cast<std::size_t>(ceil - 1);
}

std::string ThresholdRatio::to_string() const
{
  return std::to_string(num) + "/" + std::to_string(den);
}

ThresholdRatio ThresholdRatio::parse(std::string_view text)
{
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
  {
    throw Error(ErrorKind::Parse, "threshold ratio must look like a/b");
  }
  ThresholdRatio r;
  auto           parse_part = [&](std::string_view part, std::uint32_t &out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc{} || ptr != part.data() + part.size())
    {
      throw Error(ErrorKind::Parse, "invalid threshold ratio '" + std::string{text} + "'");
    }
  };
  parse_part(text.substr(0, slash), r.num);
  parse_part(text.substr(slash + 1), r.den);
  if (r.num == 0 || r.den == 0 || r.num > r.den)
  {
    throw Error(ErrorKind::Parse, "threshold ratio must lie in (0, 1]");
  }
  return r;
}

TidContract::TidContract(ContractConfig config)
  : config_{std::move(config)}
{
  if (!(config_.registration_end < config_.distribution_end &&
        config_.distribution_end < config_.dispute_end))
  {
    throw Error(ErrorKind::Invariant, "phase schedule must be strictly increasing");
  }
}

std::optional<MemberIndex> TidContract::index_of(AccountId account) const
{
  auto it = by_account_.find(account);
  if (it == by_account_.end())
  {
    return std::nullopt;
  }
  return it->second;
}

std::vector<MemberIndex> TidContract::qualified_indices() const
{
  std::vector<MemberIndex> out;
  for (auto const &[idx, rec] : members_)
  {
    if (rec.qualified)
    {
      out.push_back(idx);
    }
  }
  return out;
}

bool TidContract::has_pending_deadlines(std::uint64_t height) const
{
  switch (phase_)
  {
  case Phase::Registration:
    return height >= config_.registration_end;
  case Phase::ShareDistribution:
    return height >= config_.distribution_end;
  case Phase::Dispute:
    return height >= config_.dispute_end;
  default:
    return false;
  }
}

void TidContract::enter(Phase p, Outcome &out)
{
  phase_ = p;
  phase_history_.push_back(p);
  out.events.emplace_back(events::PhaseEntered{p});
}

void TidContract::disqualify(ExecutionContext &ctx, MemberIndex index,
                             DisqualificationCause cause, Outcome &out)
{
  auto &rec            = members_.at(index);
  rec.qualified        = false;
  rec.disqualified_for = cause;
  metering::count_stored_words(1);
  out.events.emplace_back(events::MemberDisqualified{index, cause});
  std::uint64_t amount = ctx.balances.slash(rec.account);
  out.events.emplace_back(events::DepositSlashed{rec.account, amount});
}

void TidContract::refund_qualified(ExecutionContext &ctx, Outcome &out)
{
  for (auto const &[idx, rec] : members_)
  {
    if (rec.qualified && ctx.balances.escrowed(rec.account) != 0)
    {
      std::uint64_t amount = ctx.balances.refund(rec.account);
      out.events.emplace_back(events::DepositRefunded{rec.account, amount});
    }
  }
}

void TidContract::abort_if_below_threshold(ExecutionContext &ctx, Outcome &out)
{
  std::size_t const qualified = qualified_indices().size();
  if (qualified < threshold_.value_or(0) + 1)
  {
    enter(Phase::Aborted, out);
    out.events.emplace_back(events::Aborted{qualified});
    refund_qualified(ctx, out);
  }
}

Outcome TidContract::process_deadlines(ExecutionContext &ctx)
{
  Outcome out = Outcome::ok();
  while (has_pending_deadlines(ctx.height))
  {
    switch (phase_)
    {
    case Phase::Registration:
      enter(Phase::ShareDistribution, out);
      if (members_.empty())
      {
        enter(Phase::Aborted, out);
        out.events.emplace_back(events::Aborted{0});
        break;
      }
      threshold_ = config_.ratio.threshold_for(members_.size());
      metering::count_stored_words(1);
      break;
    case Phase::ShareDistribution:
      for (auto const &[idx, rec] : members_)
      {
        if (!rec.broadcast_digest && rec.qualified)
        {
          disqualify(ctx, idx, DisqualificationCause::Inactivity, out);
        }
      }
      enter(Phase::Dispute, out);
      abort_if_below_threshold(ctx, out);
      break;
    case Phase::Dispute:
      enter(Phase::Reconstruction, out);
      abort_if_below_threshold(ctx, out);
      break;
    default:
      return out;
    }
  }
  return out;
}

Outcome TidContract::execute(ExecutionContext &ctx, Transaction const &tx)
{
  if (has_pending_deadlines(ctx.height))
  {
    process_deadlines(ctx);
  }
  switch (tx.function)
  {
  case Function::Deploy:
    return deploy(ctx);
  case Function::Register:
    return register_member(ctx, tx);
  case Function::DistributeShares:
    return distribute_shares(ctx, tx);
  case Function::SubmitDispute:
    return submit_dispute(ctx, tx);
  case Function::GenerateMpk:
    return generate_mpk(ctx);
  case Function::SubmitSecret:
    return submit_secret(ctx, tx);
  case Function::SubmitMsk:
    return submit_msk(ctx, tx);
  case Function::Sync:
    break;
  }
  return Outcome::reject(RejectReason::WrongPhase);
}

Outcome TidContract::deploy(ExecutionContext &ctx)
{
  if (phase_ != Phase::Setup || ctx.height >= config_.registration_end)
  {
    return Outcome::reject(RejectReason::WrongPhase);
  }
  Outcome out = Outcome::ok();
  metering::count_stored_words(6);  // ratio, three deadlines, delta_hold, deposit
  enter(Phase::Registration, out);
  return out;
}

Outcome TidContract::register_member(ExecutionContext &ctx, Transaction const &tx)
{
  if (phase_ != Phase::Registration)
  {
    return Outcome::reject(RejectReason::WrongPhase);
  }
  if (by_account_.count(ctx.sender) != 0)
  {
    return Outcome::reject(RejectReason::AlreadyRegistered);
  }
  if (tx.value != config_.deposit)
  {
    return Outcome::reject(RejectReason::WrongDeposit);
  }
  GroupElement channel_pk;
  try
  {
    channel_pk = GroupElement::decode(tx.payload);
  }
  catch (Error const &)
  {
    return Outcome::reject(RejectReason::InvalidEncoding);
  }
  if (channel_pk.is_identity())
  {
    return Outcome::reject(RejectReason::InvalidEncoding);
  }
  if (ctx.balances.wallet(ctx.sender) < tx.value)
  {
    return Outcome::reject(RejectReason::InsufficientFunds);
  }

  ctx.balances.hold(ctx.sender, tx.value);
  auto const index = static_cast<MemberIndex>(members_.size() + 1);
  members_.emplace(index, MemberRecord{ctx.sender, channel_pk, {}, {}, true, {}});
  by_account_.emplace(ctx.sender, index);
  metering::count_stored_words(3);

  Outcome out = Outcome::ok();
  out.events.emplace_back(events::Registered{index, ctx.sender});
  return out;
}

Outcome TidContract::distribute_shares(ExecutionContext &ctx, Transaction const &tx)
{
  if (phase_ != Phase::ShareDistribution)
  {
    return Outcome::reject(RejectReason::WrongPhase);
  }
  auto idx = index_of(ctx.sender);
  if (!idx)
  {
    return Outcome::reject(RejectReason::NotMember);
  }
  auto &rec = members_.at(*idx);
  if (rec.broadcast_digest)
  {
    return Outcome::reject(RejectReason::AlreadyDistributed);
  }
  std::size_t const t = *threshold_;
  if (tx.payload.size() != SharesBroadcast::encoded_size(n(), t))
  {
    return Outcome::reject(RejectReason::BadArity);
  }
  SharesBroadcast broadcast;
  try
  {
    broadcast = SharesBroadcast::decode(tx.payload, n(), t);
  }
  catch (Error const &)
  {
    return Outcome::reject(RejectReason::InvalidEncoding);
  }

  rec.broadcast_digest = hash_digest(tx.payload);
  rec.pk               = broadcast.pk;
  metering::count_stored_words(1 + 2);

  Outcome out = Outcome::ok();
  out.events.emplace_back(events::SharesDistributed{*idx, *rec.broadcast_digest});
  return out;
}

Outcome TidContract::submit_dispute(ExecutionContext &ctx, Transaction const &tx)
{
  if (phase_ != Phase::Dispute)
  {
    return Outcome::reject(RejectReason::WrongPhase);
  }
  auto accuser = index_of(ctx.sender);
  if (!accuser)
  {
    return Outcome::reject(RejectReason::NotMember);
  }
  MemberIndex accused = 0;
  try
  {
    accused = peek_dispute_accused(tx.payload);
  }
  catch (Error const &)
  {
    return Outcome::reject(RejectReason::InvalidEncoding);
  }
  auto accused_it = members_.find(accused);
  if (accused_it == members_.end())
  {
    return Outcome::reject(RejectReason::NotMember);
  }
  if (accused == *accuser)
  {
    return Outcome::reject(RejectReason::SelfDispute);
  }
  MemberRecord &target = accused_it->second;
  if (!target.qualified)
  {
    return Outcome::reject(RejectReason::Moot);
  }

  std::size_t const t = *threshold_;
  if (tx.payload.size() != DisputeArgs::encoded_size(n(), t))
  {
    return Outcome::reject(RejectReason::BadArity);
  }
  DisputeArgs     args;
  SharesBroadcast broadcast;
  try
  {
    args      = decode_dispute(tx.payload, n(), t);
    broadcast = SharesBroadcast::decode(args.broadcast, n(), t);
  }
  catch (Error const &)
  {
    return Outcome::reject(RejectReason::InvalidEncoding);
  }

  // (a) the resubmitted broadcast must be the one that was stored
  if (!target.broadcast_digest || hash_digest(args.broadcast) != *target.broadcast_digest)
  {
    return Outcome::reject(RejectReason::DigestMismatch);
  }

  // (b) k_ij is proven against both registered channel keys
  MemberRecord const &accuser_rec = members_.at(*accuser);
  Bytes const context = dispute_context(config_.instance_id, accused, *accuser);
  if (!verify_key(accuser_rec.channel_pk, target.channel_pk, args.key, args.proof, context))
  {
    return Outcome::reject(RejectReason::InvalidProof);
  }

  // (c) decrypt the accuser's shadow, (d) check it against the broadcast polynomial
  EncryptedShadow const es{accused, *accuser,
                           broadcast.encrypted_shadows[SharesBroadcast::slot_of(accused, *accuser)]};
  Scalar const             u = decrypt_shadow(es, args.key);
  VerificationVector const vv{broadcast.pk, broadcast.commitments};
  if (verify_shadow(Shadow{accused, *accuser, u}, vv))
  {
    return Outcome::reject(RejectReason::ShadowValid);
  }

  Outcome out = Outcome::ok();
  disqualify(ctx, accused, DisqualificationCause::InvalidShadow, out);
  return out;
}

Outcome TidContract::generate_mpk(ExecutionContext &ctx)
{
  if (phase_ != Phase::Reconstruction)
  {
    return Outcome::reject(RejectReason::WrongPhase);
  }
  if (!index_of(ctx.sender))
  {
    return Outcome::reject(RejectReason::NotMember);
  }
  if (mpk_)
  {
    return Outcome::reject(RejectReason::AlreadyGenerated);
  }

  std::optional<GroupElement> product;
  for (auto const &[idx, rec] : members_)
  {
    if (!rec.qualified)
    {
      continue;
    }
    product = product ? group_combine(*product, *rec.pk) : *rec.pk;
  }
  mpk_         = *product;
  recon_begin_ = ctx.height + config_.delta_hold;
  metering::count_stored_words(2 + 1);

  Outcome out = Outcome::ok();
  out.events.emplace_back(events::MpkPublished{*mpk_, *recon_begin_});
  return out;
}

Outcome TidContract::submit_secret(ExecutionContext &ctx, Transaction const &tx)
{
  if (phase_ != Phase::Reconstruction)
  {
    return Outcome::reject(RejectReason::WrongPhase);
  }
  if (!recon_begin_ || ctx.height < *recon_begin_)
  {
    return Outcome::reject(RejectReason::TooEarly);
  }
  auto idx = index_of(ctx.sender);
  if (!idx)
  {
    return Outcome::reject(RejectReason::NotMember);
  }
  if (!members_.at(*idx).qualified)
  {
    return Outcome::reject(RejectReason::NotQualified);
  }
  if (revealed_.count(*idx) != 0)
  {
    return Outcome::reject(RejectReason::AlreadySubmitted);
  }
  if (tx.payload.size() != 2 * Scalar::kEncodedSize)
  {
    return Outcome::reject(RejectReason::BadArity);
  }
  RevealedSecret secret;
  try
  {
    secret.sk    = Scalar::decode(std::span{tx.payload}.first(32));
    secret.share = Scalar::decode(std::span{tx.payload}.subspan(32, 32));
  }
  catch (Error const &)
  {
    return Outcome::reject(RejectReason::InvalidEncoding);
  }
  // Recorded verbatim: neither value is checked here.
  revealed_.emplace(*idx, secret);
  metering::count_stored_words(2);

  Outcome out = Outcome::ok();
  out.events.emplace_back(events::SecretSubmitted{*idx, secret.sk, secret.share});
  return out;
}

Outcome TidContract::submit_msk(ExecutionContext &ctx, Transaction const &tx)
{
  if (phase_ != Phase::Reconstruction || !mpk_)
  {
    return Outcome::reject(RejectReason::TooEarly);
  }
  if (msk_)
  {
    return Outcome::reject(RejectReason::MskAlreadySet);
  }
  if (tx.payload.size() != Scalar::kEncodedSize)
  {
    return Outcome::reject(RejectReason::BadArity);
  }
  Scalar candidate;
  try
  {
    candidate = Scalar::decode(tx.payload);
  }
  catch (Error const &)
  {
    return Outcome::reject(RejectReason::InvalidEncoding);
  }
  if (!(generator_exp(candidate) == *mpk_))
  {
    return Outcome::reject(RejectReason::MskMismatch);
  }

  msk_ = candidate;
  metering::count_stored_words(1);
  Outcome out = Outcome::ok();
  out.events.emplace_back(events::MskAccepted{candidate});
  refund_qualified(ctx, out);
  return out;
}

}  // namespace tidlab
