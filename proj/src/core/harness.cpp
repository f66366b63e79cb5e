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

#include "tidlab/harness.hpp"

#include "tidlab/elgamal.hpp"
#include "tidlab/error.hpp"
#include "tidlab/keyfile.hpp"
#include "tidlab/member.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

namespace tidlab {
namespace {

constexpr std::array kPhaseOrder{Phase::Setup, Phase::Registration, Phase::ShareDistribution,
                                 Phase::Dispute, Phase::Reconstruction};

// Phase in which an accepted call of `f` is legal.
std::optional<Phase> required_phase(Function f)
{
  switch (f)
  {
  case Function::Deploy:
    return Phase::Setup;
  case Function::Register:
    return Phase::Registration;
  case Function::DistributeShares:
    return Phase::ShareDistribution;
  case Function::SubmitDispute:
    return Phase::Dispute;
  case Function::GenerateMpk:
  case Function::SubmitSecret:
  case Function::SubmitMsk:
    return Phase::Reconstruction;
  case Function::Sync:
    break;
  }
  return std::nullopt;
}

bool contains(Bytes const &haystack, Bytes const &needle)
{
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

class Run
{
public:
  Run(Scenario const &sc, std::string_view seed)
    : sc_{sc}
    , root_{seed}
    , contract_{make_config(sc, root_)}
    , ledger_{contract_}
  {
    report_.scenario = sc.name;
    report_.seed     = std::string{seed};
    report_.n        = sc.n;
    for (std::size_t k = 0; k < sc.n; ++k)
    {
      members_.emplace_back(sc.strategies[k], root_.fork("member", k + 1));
    }
  }

  RunReport execute();

private:
  static ContractConfig make_config(Scenario const &sc, Drbg const &root)
  {
    ContractConfig c;
    c.ratio            = sc.ratio;
    c.registration_end = 1 + sc.registration_blocks;
    c.distribution_end = c.registration_end + sc.distribution_blocks;
    c.dispute_end      = c.distribution_end + sc.dispute_blocks;
    c.delta_hold       = sc.delta_hold;
    c.deposit          = sc.deposit;
    c.instance_id      = root.fork("instance").next_bytes(32);
    return c;
  }

  LedgerView view() const
  {
    return LedgerView{ledger_.height(), contract_, ledger_.log()};
  }

  void advance_to(std::uint64_t h)
  {
    if (h > ledger_.height())
    {
      ledger_.advance_blocks(h - ledger_.height());
    }
    ledger_.sync();
  }

  void verdict(std::string name, bool passed, std::string detail = {})
  {
    report_.invariants.push_back({std::move(name), passed, std::move(detail)});
  }

  // Lets each member act once for the current phase, in index order.
  void round(std::function<Duties(std::size_t)> const &duties)
  {
    for (std::size_t k = 0; k < members_.size(); ++k)
    {
      for (auto const &tx : members_[k].run_phase(view(), duties(k)))
      {
        Outcome out = ledger_.submit_transaction(members_[k].account(), tx);
        if (!out.accepted)
        {
          member_rejections_.push_back("member " + std::to_string(k + 1) + " " +
                                       std::string{function_name(tx.function)} + ": " +
                                       std::string{reject_reason_name(out.reason)});
        }
      }
    }
  }

  void run_disputes();
  void run_reconstruction();
  void encrypt_submissions();
  void check_invariants();

  Scenario const            &sc_;
  Drbg                       root_;
  TidContract                contract_;
  Ledger                     ledger_;
  std::vector<MemberSession> members_;
  AccountId                  user_;
  RunReport                  report_;
  std::vector<std::string>   member_rejections_;
  std::vector<Bytes>         plaintexts_;
  std::optional<bool>        sealed_before_recon_;
};

RunReport Run::execute()
{
  AccountId const deployer = ledger_.open_account(0);
  user_                    = ledger_.open_account(0);
  for (auto &m : members_)
  {
    m.bind_account(ledger_.open_account(2 * sc_.deposit));
  }

  ledger_.submit_transaction(deployer, make_deploy());
  ledger_.advance_blocks(1);

  Duties const plain{};
  round([&](std::size_t) { return plain; });
  advance_to(contract_.config().registration_end);

  if (contract_.phase() == Phase::ShareDistribution)
  {
    round([&](std::size_t) { return plain; });
    advance_to(contract_.config().distribution_end);
  }
  if (contract_.phase() == Phase::Dispute)
  {
    run_disputes();
    advance_to(contract_.config().dispute_end);
  }
  if (contract_.phase() == Phase::Reconstruction)
  {
    run_reconstruction();
  }

  report_.t           = contract_.threshold();
  report_.final_phase = contract_.phase();
  report_.qualified   = contract_.qualified_indices();
  for (auto const &[idx, rec] : contract_.members())
  {
    if (rec.disqualified_for)
    {
      report_.disqualified.emplace_back(idx, *rec.disqualified_for);
    }
  }
  for (auto const &[idx, _] : contract_.revealed())
  {
    report_.revealed.push_back(idx);
  }
  report_.mpk = contract_.mpk();
  report_.msk = contract_.msk();
  if (contract_.phase() == Phase::Aborted)
  {
    report_.outcome = Expectation::Aborted;
  }
  else
  {
    report_.outcome = contract_.msk() ? Expectation::Completed : Expectation::Unrecovered;
  }
  for (auto const &m : members_)
  {
    if (m.observed_partial_mpk())
    {
      report_.partial_mpk = m.observed_partial_mpk();
    }
  }

  check_invariants();
  report_.slashed_pool = ledger_.balances().pool();
  report_.log          = ledger_.log();
  return std::move(report_);
}

void Run::run_disputes()
{
  std::size_t const before = ledger_.log().size();
  round([](std::size_t) { return Duties{}; });

  // A second copy of the first successful dispute must be recognised as moot.
  for (std::size_t e = before; e < ledger_.log().size(); ++e)
  {
    LogEntry const entry = ledger_.log()[e];
    if (entry.tx.function == Function::SubmitDispute && entry.outcome.accepted)
    {
      Outcome out  = ledger_.submit_transaction(entry.sender, entry.tx);
      auto const &m = ledger_.log().back().meter;
      bool ok = !out.accepted && out.reason == RejectReason::Moot && m.group_exps == 0 &&
                m.hash_calls == 0 && m.stored_words == 0;
      verdict("moot_redispute", ok,
              "reason " + std::string{reject_reason_name(out.reason)} + ", group_exps " +
                  std::to_string(m.group_exps));
      break;
    }
  }

  for (auto const &fa : sc_.false_accusations)
  {
    auto const qualified_before = contract_.qualified_indices();
    Balances const balances_before = ledger_.balances();
    MemberSession &accuser = members_[fa.accuser - 1];
    if (!accuser.index() || collect_broadcasts(view()).count(fa.accused) == 0)
    {
      verdict("unfounded_dispute_rejected", false,
              "accusation " + std::to_string(fa.accuser) + "->" + std::to_string(fa.accused) +
                  " could not be built");
      continue;
    }
    auto intent = accuser.build_dispute(view(), fa.accused);
    Outcome out = ledger_.submit_transaction(accuser.account(), make_dispute(intent.args));
    bool const unchanged = contract_.qualified_indices() == qualified_before &&
                           ledger_.balances() == balances_before;
    verdict("unfounded_dispute_rejected", !out.accepted && unchanged,
            std::to_string(fa.accuser) + "->" + std::to_string(fa.accused) + ": " +
                std::string{reject_reason_name(out.reason)} +
                (unchanged ? "" : " (state changed)"));
  }
}

void Run::run_reconstruction()
{
  // Scheduling convention: the lowest-index qualified honest member requests mpk.
  std::optional<std::size_t> generator;
  for (std::size_t k = 0; k < members_.size() && !generator; ++k)
  {
    auto idx = members_[k].index();
    if (idx && contract_.members().at(*idx).qualified &&
        members_[k].strategy().kind == StrategyKind::Honest)
    {
      generator = k;
    }
  }
  for (std::size_t k = 0; k < members_.size() && !generator; ++k)
  {
    auto idx = members_[k].index();
    if (idx && contract_.members().at(*idx).qualified &&
        members_[k].strategy().kind != StrategyKind::SilentAfterRegistration)
    {
      generator = k;
    }
  }
  if (generator)
  {
    round([&](std::size_t k) { return Duties{k == *generator, false}; });
  }
  if (!contract_.mpk())
  {
    return;
  }

  encrypt_submissions();
  sealed_before_recon_ = !contract_.msk() && contract_.revealed().empty();
  advance_to(*contract_.recon_begin());

  // Pick revealers among qualified members willing to reveal.
  std::vector<std::size_t> willing;
  for (std::size_t k = 0; k < members_.size(); ++k)
  {
    auto idx = members_[k].index();
    if (idx && contract_.members().at(*idx).qualified && members_[k].strategy().reveals())
    {
      willing.push_back(k);
    }
  }
  std::size_t limit = willing.size();
  if (sc_.reveal == RevealPolicy::Minimal)
  {
    limit = std::min(limit, *contract_.threshold() + 1);
  }
  else if (sc_.reveal == RevealPolicy::Count)
  {
    limit = std::min(limit, sc_.reveal_count);
  }
  std::vector<bool> chosen(members_.size(), false);
  for (std::size_t k = 0; k < limit; ++k)
  {
    chosen[willing[k]] = true;
  }
  round([&](std::size_t k) { return Duties{false, chosen[k]}; });

  std::vector<IndexedShare> shares;
  for (auto const &[idx, secret] : contract_.revealed())
  {
    shares.push_back(IndexedShare{idx, secret.share});
  }
  std::size_t const t = *contract_.threshold();
  if (shares.size() >= t + 1)
  {
    Scalar const msk = reconstruct_msk(shares, t);
    std::vector<IndexedShare> tail(shares.end() - static_cast<std::ptrdiff_t>(t + 1), shares.end());
    Scalar const msk_tail = reconstruct_msk(tail, t);
    verdict("reconstruction_subset_invariant", msk == msk_tail);
    ledger_.submit_transaction(user_, make_submit_msk(msk));
  }
  else if (!shares.empty())
  {
    // Best effort with too few shares; the contract must refuse it.
    Scalar const guess = lagrange_reconstruct(shares, shares.size() - 1);
    Outcome out        = ledger_.submit_transaction(user_, make_submit_msk(guess));
    verdict("underfull_msk_rejected", !out.accepted,
            std::string{reject_reason_name(out.reason)});
  }

  if (contract_.msk())
  {
    for (std::size_t k = 0; k < report_.submissions.size(); ++k)
    {
      auto &rec = report_.submissions[k];
      try
      {
        Bytes plain = hybrid_decrypt(*contract_.msk(), HybridCiphertext::decode(rec.ciphertext));
        rec.decrypted = plain == plaintexts_[k];
      }
      catch (Error const &)
      {
        rec.decrypted = false;
      }
    }
  }
}

void Run::encrypt_submissions()
{
  for (std::size_t k = 0; k < sc_.submissions.size(); ++k)
  {
    auto const &spec  = sc_.submissions[k];
    Bytes       plain = spec.is_random ? root_.fork("plaintext", k).next_bytes(spec.random_bytes)
                                       : spec.literal;
    Bytes const rng   = root_.fork("submission", k).next_bytes(32);
    SubmissionRecord rec;
    rec.ciphertext        = hybrid_encrypt(*contract_.mpk(), plain, rng).encode();
    rec.plaintext_digest  = hash_digest(plain);
    rec.ciphertext_digest = hash_digest(rec.ciphertext);
    report_.submissions.push_back(std::move(rec));
    plaintexts_.push_back(std::move(plain));
  }
}

void Run::check_invariants()
{
  auto const &log = ledger_.log();

  // Phase monotonicity: a prefix of the canonical order, possibly cut by Aborted.
  {
    auto const &hist = contract_.phase_history();
    bool        ok   = !hist.empty();
    for (std::size_t k = 0; k < hist.size() && ok; ++k)
    {
      bool const last_abort = hist[k] == Phase::Aborted && k + 1 == hist.size() && k >= 2;
      ok = (k < kPhaseOrder.size() && hist[k] == kPhaseOrder[k]) || last_abort;
    }
    std::string seq;
    for (auto p : hist)
    {
      seq += (seq.empty() ? "" : ">") + std::string{phase_name(p)};
    }
    verdict("phase_monotonicity", ok, seq);
  }

  // Every accepted call happened in its phase; rejected calls carry no events.
  {
    Phase       current = Phase::Setup;
    bool        in_phase = true, pure = true;
    std::string detail;
    for (std::size_t e = 0; e < log.size(); ++e)
    {
      auto const &entry = log[e];
      if (entry.outcome.accepted)
      {
        auto req = required_phase(entry.tx.function);
        if (req && *req != current)
        {
          in_phase = false;
          detail   = "entry " + std::to_string(e) + " " +
                   std::string{function_name(entry.tx.function)} + " in " +
                   std::string{phase_name(current)};
        }
      }
      else if (!entry.outcome.events.empty())
      {
        pure   = false;
        detail = "rejected entry " + std::to_string(e) + " has events";
      }
      for (auto const &ev : entry.outcome.events)
      {
        if (auto const *pe = std::get_if<events::PhaseEntered>(&ev))
        {
          current = pe->phase;
        }
      }
    }
    verdict("no_out_of_phase_execution", in_phase, in_phase ? "" : detail);
    verdict("rejections_change_nothing", pure, pure ? "" : detail);
  }

  verdict("member_transactions_accepted", member_rejections_.empty(),
          member_rejections_.empty() ? "" : member_rejections_.front());

  // Dispute soundness against ground truth: only the designated target of an
  // invalid_shadow member holds a bad shadow.
  {
    bool        ok = true;
    std::string detail;
    for (auto const &entry : log)
    {
      if (entry.tx.function != Function::SubmitDispute)
      {
        continue;
      }
      auto accuser = contract_.index_of(entry.sender);
      MemberIndex accused = peek_dispute_accused(entry.tx.payload);
      if (!accuser || accused == 0 || accused > members_.size())
      {
        continue;
      }
      auto const &s = members_[accused - 1].strategy();
      bool const bad = s.kind == StrategyKind::InvalidShadow && s.target == *accuser;
      if ((entry.outcome.accepted && !bad) ||
          (entry.outcome.reason == RejectReason::ShadowValid && bad))
      {
        ok     = false;
        detail = std::to_string(*accuser) + "->" + std::to_string(accused);
      }
    }
    for (auto const &[idx, rec] : contract_.members())
    {
      auto const &s = members_[idx - 1].strategy();
      if (rec.disqualified_for == DisqualificationCause::InvalidShadow &&
          s.kind != StrategyKind::InvalidShadow)
      {
        ok     = false;
        detail = "member " + std::to_string(idx) + " disqualified without cause";
      }
      bool const target_live = s.kind == StrategyKind::InvalidShadow &&
                               members_[s.target - 1].strategy().kind !=
                                   StrategyKind::SilentAfterRegistration;
      if (target_live && rec.broadcast_digest && rec.qualified)
      {
        ok     = false;
        detail = "member " + std::to_string(idx) + " kept qualification despite a bad shadow";
      }
    }
    verdict("dispute_soundness", ok, detail);
  }

  verdict("deposit_conservation", ledger_.balances().conserved());

  if (report_.outcome == Expectation::Completed || report_.outcome == Expectation::Aborted)
  {
    bool settled = true;
    for (auto const &m : members_)
    {
      settled = settled && ledger_.balances().escrowed(m.account()) == 0;
    }
    verdict("deposits_settled", settled);
  }

  verdict("expected_outcome", report_.outcome == sc_.expect,
          "expected " + std::string{expectation_name(sc_.expect)} + ", got " +
              std::string{expectation_name(report_.outcome)});

  if (!contract_.mpk())
  {
    return;
  }
  GroupElement const &mpk = *contract_.mpk();

  Scalar sum;
  for (MemberIndex idx : contract_.qualified_indices())
  {
    sum = sum + *members_[idx - 1].secret();
  }
  verdict("mpk_matches_contributions", generator_exp(sum) == mpk);

  verdict("msk_sealed_before_recon_begin", sealed_before_recon_.value_or(false));

  // Nothing a member sends before its own reveal may contain sk_i or s_i.
  {
    bool        ok = true;
    std::string detail;
    for (auto const &m : members_)
    {
      if (!m.secret() || m.strategy().kind == StrategyKind::Biasing)
      {
        continue;
      }
      std::vector<Bytes> secrets{m.secret()->encode()};
      if (m.share())
      {
        secrets.push_back(m.share()->value.encode());
      }
      for (auto const &entry : log)
      {
        if (entry.tx.function == Function::SubmitSecret && entry.sender == m.account())
        {
          break;
        }
        for (auto const &s : secrets)
        {
          if (contains(entry.tx.payload, s))
          {
            ok     = false;
            detail = "secret of member " + std::to_string(*m.index()) + " leaked at height " +
                     std::to_string(entry.height);
          }
        }
      }
    }
    verdict("secrets_withheld_until_reveal", ok, detail);
  }

  std::vector<IndexedShare> shares;
  for (auto const &[idx, secret] : contract_.revealed())
  {
    shares.push_back(IndexedShare{idx, secret.share});
  }
  std::size_t const t = *contract_.threshold();

  // Safety: no subset of at most t revealed shares interpolates to msk (small councils).
  if (sc_.n <= 8 && !shares.empty())
  {
    bool              ok = true;
    std::size_t const k  = shares.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
    {
      std::vector<IndexedShare> subset;
      for (std::size_t b = 0; b < k; ++b)
      {
        if (mask & (1u << b))
        {
          subset.push_back(shares[b]);
        }
      }
      if (subset.size() > t)
      {
        continue;
      }
      if (generator_exp(lagrange_reconstruct(subset, subset.size() - 1)) == mpk)
      {
        ok = false;
      }
    }
    verdict("safety_small_subsets", ok);
  }

  verdict("liveness", shares.size() < t + 1 || contract_.msk().has_value(),
          std::to_string(shares.size()) + " shares revealed, t = " + std::to_string(t));

  if (contract_.msk())
  {
    verdict("msk_matches_mpk", generator_exp(*contract_.msk()) == mpk && *contract_.msk() == sum);
    bool all = std::all_of(report_.submissions.begin(), report_.submissions.end(),
                           [](auto const &r) { return r.decrypted; });
    verdict("submissions_decrypt", all);
  }

  for (std::size_t k = 0; k < members_.size(); ++k)
  {
    auto const &m = members_[k];
    if (m.strategy().kind != StrategyKind::Biasing || !m.index() ||
        !contract_.members().at(*m.index()).qualified)
    {
      continue;
    }
    GroupElement others = GroupElement::identity();
    for (MemberIndex idx : contract_.qualified_indices())
    {
      if (idx != *m.index())
      {
        others = group_combine(others, *contract_.members().at(idx).pk);
      }
    }
    verdict("biasing_shift", mpk == group_combine(others, generator_exp(m.strategy().bias)));
  }
}

}  // namespace

bool RunReport::passed() const
{
  return !first_violation().has_value();
}

std::optional<InvariantVerdict> RunReport::first_violation() const
{
  for (auto const &v : invariants)
  {
    if (!v.passed)
    {
      return v;
    }
  }
  return std::nullopt;
}

std::vector<MeterRow> RunReport::meter_rows() const
{
  std::vector<MeterRow> rows;
  rows.reserve(log.size());
  for (auto const &e : log)
  {
    rows.push_back(MeterRow{e.height, e.tx.function, e.outcome.accepted, e.meter});
  }
  return rows;
}

std::string report_json(RunReport const &r)
{
  using nlohmann::ordered_json;
  ordered_json j;
  j["scenario"] = r.scenario;
  j["seed"]     = r.seed;
  j["group"]    = group_context().name;
  j["hash"]     = kHashFunctionName;
  j["cipher"]   = kHybridCipherName;
  j["n"]        = r.n;
  j["t"]        = r.t ? ordered_json(*r.t) : ordered_json(nullptr);
  j["outcome"]  = expectation_name(r.outcome);
  j["final_phase"] = phase_name(r.final_phase);
  j["qualified"]   = r.qualified;
  auto dq          = ordered_json::array();
  for (auto const &[idx, cause] : r.disqualified)
  {
    dq.push_back({{"index", idx},
                  {"cause", cause == DisqualificationCause::Inactivity ? "inactivity"
                                                                        : "invalid_shadow"}});
  }
  j["disqualified"] = std::move(dq);
  j["revealed"]     = r.revealed;
  j["mpk"]          = r.mpk ? ordered_json(r.mpk->to_hex()) : ordered_json(nullptr);
  j["msk"]          = r.msk ? ordered_json(r.msk->to_hex()) : ordered_json(nullptr);
  if (r.partial_mpk)
  {
    j["partial_mpk"] = r.partial_mpk->to_hex();
  }
  j["slashed_pool"] = r.slashed_pool;
  auto subs         = ordered_json::array();
  for (auto const &s : r.submissions)
  {
    subs.push_back({{"plaintext_sha256", to_hex(s.plaintext_digest)},
                    {"ciphertext_sha256", to_hex(s.ciphertext_digest)},
                    {"decrypted", s.decrypted}});
  }
  j["submissions"] = std::move(subs);
  auto inv         = ordered_json::array();
  for (auto const &v : r.invariants)
  {
    inv.push_back({{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
  }
  j["invariants"] = std::move(inv);
  j["passed"]     = r.passed();
  return j.dump(2) + "\n";
}

void write_meter_csv(std::ostream &out, RunReport const &r)
{
  out << "height,function,n,t,group_exps,group_combines,hash_calls,stored_words,payload_words\n";
  for (auto const &row : r.meter_rows())
  {
    out << row.height << ',' << function_name(row.function) << ',' << r.n << ','
        << (r.t ? std::to_string(*r.t) : "") << ',' << row.meter.group_exps << ','
        << row.meter.group_combines << ',' << row.meter.hash_calls << ','
        << row.meter.stored_words << ',' << row.meter.payload_words << '\n';
  }
}

void RunReport::write(std::filesystem::path const &dir) const
{
  std::filesystem::create_directories(dir);
  auto open = [&](char const *name) {
    std::ofstream f{dir / name, std::ios::binary | std::ios::trunc};
    if (!f)
    {
      throw Error(ErrorKind::Io, "cannot write " + (dir / name).string());
    }
    return f;
  };
  {
    auto f = open("log.jsonl");
    write_log_jsonl(f, log);
  }
  {
    auto f = open("meter.csv");
    write_meter_csv(f, *this);
  }
  {
    auto f = open("report.json");
    f << report_json(*this);
  }
  if (mpk)
  {
    write_mpk_file(dir / "mpk.key", *mpk);
  }
  if (msk)
  {
    write_msk_file(dir / "msk.key", *msk);
  }
  for (std::size_t k = 0; k < submissions.size(); ++k)
  {
    std::string const name = "submission_" + std::to_string(k) + ".tidc";
    std::ofstream     f{dir / name, std::ios::binary | std::ios::trunc};
    f.write(reinterpret_cast<char const *>(submissions[k].ciphertext.data()),
            static_cast<std::streamsize>(submissions[k].ciphertext.size()));
  }
}

RunReport run_scenario(Scenario const &scenario, std::string_view seed)
{
  scenario.validate();
  Run run{scenario, seed};
  return run.execute();
}

RunReport biasing_demo(std::size_t n, Scalar const &b, std::string_view seed)
{
  Scenario s          = happy_scenario(n, ThresholdRatio{1, 2});
  s.name              = "bias_demo_" + std::to_string(n);
  s.strategies.back() = Strategy::biasing(b);
  return run_scenario(s, seed);
}

SweepReport cost_sweep(std::vector<std::size_t> const &n_values,
                       std::vector<ThresholdRatio> const &ratios, std::string_view seed)
{
  std::vector<SweepPoint> points;
  for (auto const &ratio : ratios)
  {
    for (std::size_t n : n_values)
    {
      points.push_back({n, ratio});
    }
  }
  return cost_sweep(points, seed);
}

SweepReport cost_sweep(std::vector<SweepPoint> const &points, std::string_view seed)
{
  SweepReport sweep;
  std::map<std::size_t, std::uint64_t> dispute_exps_by_t;
  constexpr std::array kFunctions{Function::Deploy,      Function::Register,
                                  Function::DistributeShares, Function::SubmitDispute,
                                  Function::GenerateMpk, Function::SubmitSecret,
                                  Function::SubmitMsk};

  for (auto const &[n, ratio] : points)
  {
    Scenario s      = happy_scenario(n, ratio, 0);
    s.name          = "sweep_" + std::to_string(n) + "_" + ratio.to_string();
    s.strategies[0] = Strategy::invalid_shadow(2);
    s.reveal        = RevealPolicy::Minimal;

    std::string const point_seed =
        std::string{seed} + "/" + std::to_string(n) + "/" + ratio.to_string();
    RunReport report = run_scenario(s, point_seed);
    std::string const where =
        " at n=" + std::to_string(n) + ", ratio " + ratio.to_string();
    if (!report.passed())
    {
      sweep.failures.push_back("run failed" + where + ": " + report.first_violation()->name);
      continue;
    }
    std::size_t const t = *report.t;
    std::size_t const q = report.qualified.size();
    std::string const at = " at (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";

    for (Function f : kFunctions)
    {
      auto it = std::find_if(report.log.begin(), report.log.end(), [&](LogEntry const &e) {
        return e.tx.function == f && e.outcome.accepted;
      });
      if (it == report.log.end())
      {
        sweep.failures.push_back(std::string{function_name(f)} + ": no accepted call" + at);
        continue;
      }
      sweep.rows.push_back(SweepRow{f, n, ratio, t, q, it->meter});
      CostMeter const &m = it->meter;
      auto             fail = [&](std::string const &what) {
        sweep.failures.push_back(std::string{function_name(f)} + ": " + what + at);
      };

      switch (f)
      {
      case Function::DistributeShares:
        if (m.payload_words != (n - 1) + 2 * (t + 1))
        {
          fail("payload_words " + std::to_string(m.payload_words) + " != (n-1)+2(t+1)");
        }
        if (m.stored_words != 3)
        {
          fail("stored_words " + std::to_string(m.stored_words) + " != 3");
        }
        for (auto const &e : report.log)
        {
          if (e.tx.function == f && e.outcome.accepted &&
              (e.meter.payload_words != m.payload_words || e.meter.group_exps != 0))
          {
            fail("broadcasts metered differently");
            break;
          }
        }
        break;
      case Function::GenerateMpk:
        if (m.group_combines != q - 1)
        {
          fail("group_combines " + std::to_string(m.group_combines) + " != q-1 with q=" +
               std::to_string(q));
        }
        break;
      case Function::SubmitDispute: {
        if (m.group_exps < t + 1)
        {
          fail("group_exps below t+1");
          break;
        }
        std::uint64_t const constant = m.group_exps - (t + 1);
        if (!sweep.dispute_constant)
        {
          sweep.dispute_constant = constant;
        }
        if (constant != *sweep.dispute_constant || constant != kVerifyKeyExps)
        {
          fail("group_exps " + std::to_string(m.group_exps) + " != t+1+" +
               std::to_string(kVerifyKeyExps));
        }
        auto [pos, fresh] = dispute_exps_by_t.emplace(t, m.group_exps);
        if (!fresh && pos->second != m.group_exps)
        {
          fail("group_exps differ between councils with the same t");
        }
        break;
      }
      default:
        break;
      }
    }
  }
  return sweep;
}

void SweepReport::write_csv(std::ostream &out) const
{
  out << "function,n,ratio,t,qualified,group_exps,group_combines,hash_calls,stored_words,"
         "payload_words\n";
  for (auto const &r : rows)
  {
    out << function_name(r.function) << ',' << r.n << ',' << r.ratio.to_string() << ',' << r.t
        << ',' << r.qualified << ',' << r.meter.group_exps << ',' << r.meter.group_combines
        << ',' << r.meter.hash_calls << ',' << r.meter.stored_words << ','
        << r.meter.payload_words << '\n';
  }
}

}  // namespace tidlab
