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

#include "tidlab/member.hpp"

#include "tidlab/error.hpp"

#include <algorithm>

namespace tidlab {

std::string Strategy::describe() const
{
  switch (kind)
  {
  case StrategyKind::Honest:
    return "honest";
  case StrategyKind::InvalidShadow:
    return "invalid_shadow(" + std::to_string(target) + ")";
  case StrategyKind::SilentAfterRegistration:
    return "silent_after_registration";
  case StrategyKind::SilentInReconstruction:
    return "silent_in_reconstruction";
  case StrategyKind::Biasing:
    return "biasing(" + bias.to_hex() + ")";
  }
  return "unknown";
}

MemberSession::MemberSession(Strategy strategy, Drbg rng)
  : strategy_{std::move(strategy)}
  , rng_{std::move(rng)}
  , channel_{ChannelKeyPair::from_secret(rng_.fork("channel").next_nonzero_scalar())}
{}

std::optional<Scalar> MemberSession::secret() const
{
  if (!poly_)
  {
    return std::nullopt;
  }
  return poly_->secret();
}

std::map<MemberIndex, Bytes> collect_broadcasts(LedgerView const &view)
{
  std::map<MemberIndex, Bytes> out;
  for (auto const &entry : view.log)
  {
    if (entry.tx.function != Function::DistributeShares || !entry.outcome.accepted)
    {
      continue;
    }
    if (auto idx = view.contract.index_of(entry.sender))
    {
      out.emplace(*idx, entry.tx.payload);
    }
  }
  return out;
}

SymmetricKey const &MemberSession::key_with(MemberIndex other, LedgerView const &view)
{
  auto it = keys_.find(other);
  if (it == keys_.end())
  {
    auto const &peer = view.contract.members().at(other).channel_pk;
    it               = keys_.emplace(other, derive_symmetric_key(channel_, peer)).first;
  }
  return it->second;
}

std::optional<Transaction> MemberSession::distribute(LedgerView const &view)
{
  std::size_t const n = view.contract.n();
  std::size_t const t = *view.contract.threshold();
  MemberIndex const i = *index_;

  Scalar sk;
  if (strategy_.kind == StrategyKind::Biasing)
  {
    // Observe every other contribution first; the resulting key is that product
    // times g^b.
    std::optional<GroupElement> partial;
    for (auto const &[sender, payload] : collect_broadcasts(view))
    {
      auto pk = SharesBroadcast::decode(payload, n, t).pk;
      partial = partial ? group_combine(*partial, pk) : pk;
    }
    observed_partial_mpk_ = partial.value_or(GroupElement::identity());
    sk                    = strategy_.bias;
  }
  else
  {
    sk = rng_.fork("contribution").next_scalar();
  }

  Drbg coefficients = rng_.fork("coefficients");
  poly_.emplace(make_polynomial(sk, t, [&] { return coefficients.next_scalar(); }));
  VerificationVector vv = commitment_vector(*poly_);

  SharesBroadcast broadcast;
  broadcast.pk          = vv.pk;
  broadcast.commitments = std::move(vv.commitments);
  broadcast.encrypted_shadows.reserve(n - 1);
  for (MemberIndex j = 1; j <= n; ++j)
  {
    Scalar u = poly_->evaluate(j);
    if (j == i)
    {
      received_[i] = ReceivedShadow{i, u, true};
      continue;
    }
    if (strategy_.kind == StrategyKind::InvalidShadow && strategy_.target == j)
    {
      u = u + Scalar::from_u64(1);
    }
    broadcast.encrypted_shadows.push_back(
        encrypt_shadow(Shadow{i, j, u}, key_with(j, view)).ciphertext);
  }
  return make_distribute_shares(broadcast);
}

std::vector<DisputeIntent> MemberSession::validate_inbox(LedgerView const &view)
{
  std::vector<DisputeIntent> intents;
  if (!index_ || !view.contract.threshold())
  {
    return intents;
  }
  std::size_t const n = view.contract.n();
  std::size_t const t = *view.contract.threshold();
  MemberIndex const i = *index_;

  for (auto const &[sender, payload] : collect_broadcasts(view))
  {
    if (sender == i)
    {
      continue;
    }
    if (received_.count(sender) == 0)
    {
      SharesBroadcast bc = SharesBroadcast::decode(payload, n, t);
      EncryptedShadow es{sender, i, bc.encrypted_shadows[SharesBroadcast::slot_of(sender, i)]};
      Scalar          u     = decrypt_shadow(es, key_with(sender, view));
      bool            valid = verify_shadow(Shadow{sender, i, u},
                                            VerificationVector{bc.pk, std::move(bc.commitments)});
      received_[sender]     = ReceivedShadow{sender, u, valid};
    }
    if (!received_[sender].valid && view.contract.members().at(sender).qualified)
    {
      intents.push_back(build_dispute(view, sender));
    }
  }
  return intents;
}

DisputeIntent MemberSession::build_dispute(LedgerView const &view, MemberIndex accused)
{
  auto const broadcasts = collect_broadcasts(view);
  auto const it         = broadcasts.find(accused);
  if (it == broadcasts.end())
  {
    throw Error(ErrorKind::Invariant, "no broadcast from member " + std::to_string(accused));
  }
  MemberIndex const   i   = *index_;
  SymmetricKey const &k   = key_with(accused, view);
  Bytes const context = dispute_context(view.contract.config().instance_id, accused, i);
  auto const &peer    = view.contract.members().at(accused).channel_pk;

  DisputeArgs args;
  args.accused   = accused;
  args.broadcast = it->second;
  args.key       = k;
  args.proof     = prove_key(channel_, peer, k, context);
  return DisputeIntent{accused, std::move(args)};
}

void MemberSession::aggregate(LedgerView const &view)
{
  validate_inbox(view);
  auto const          qualified = view.contract.qualified_indices();
  std::vector<Shadow> shadows;
  for (MemberIndex sender : qualified)
  {
    auto it = received_.find(sender);
    if (it == received_.end() || !it->second.valid)
    {
      // Cannot form a correct share; stay silent rather than reveal garbage.
      return;
    }
    shadows.push_back(Shadow{sender, *index_, it->second.value});
  }
  share_ = aggregate_share(*index_, shadows, qualified);
}

std::vector<Transaction> MemberSession::run_phase(LedgerView const &view, Duties const &duties)
{
  std::vector<Transaction> out;
  if (!index_ && registered_)
  {
    index_ = view.contract.index_of(account_);
  }
  bool const silent = strategy_.kind == StrategyKind::SilentAfterRegistration;

  switch (view.contract.phase())
  {
  case Phase::Registration:
    if (!registered_)
    {
      registered_ = true;
      out.push_back(make_register(channel_.public_key, view.contract.config().deposit));
    }
    break;

  case Phase::ShareDistribution:
    if (!silent && index_ && !distributed_)
    {
      distributed_ = true;
      out.push_back(*distribute(view));
    }
    break;

  case Phase::Dispute:
    if (!silent && index_)
    {
      for (auto &intent : validate_inbox(view))
      {
        if (!disputed_[intent.accused])
        {
          disputed_[intent.accused] = true;
          out.push_back(make_dispute(intent.args));
        }
      }
    }
    break;

  case Phase::Reconstruction:
    if (silent || !index_)
    {
      break;
    }
    if (duties.generate_mpk && !view.contract.mpk() && !requested_mpk_)
    {
      requested_mpk_ = true;
      out.push_back(make_generate_mpk());
    }
    if (duties.reveal && strategy_.reveals() && !revealed_ && view.contract.recon_begin() &&
        view.height >= *view.contract.recon_begin() &&
        view.contract.members().at(*index_).qualified)
    {
      if (!share_)
      {
        aggregate(view);
      }
      if (share_)
      {
        revealed_ = true;
        out.push_back(make_submit_secret(poly_->secret(), share_->value));
      }
    }
    break;

  default:
    break;
  }
  return out;
}

Scalar reconstruct_msk(std::vector<IndexedShare> revealed, std::size_t t)
{
  std::sort(revealed.begin(), revealed.end(),
            [](auto const &a, auto const &b) { return a.index < b.index; });
  revealed.erase(std::unique(revealed.begin(), revealed.end(),
                             [](auto const &a, auto const &b) { return a.index == b.index; }),
                 revealed.end());
  if (revealed.size() < t + 1)
  {
    throw Error(ErrorKind::Reconstruction, "need " + std::to_string(t + 1) +
                                               " distinct shares, have " +
                                               std::to_string(revealed.size()));
  }
  revealed.resize(t + 1);
  return lagrange_reconstruct(revealed, t);
}

}  // namespace tidlab
