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

#include "tidlab/scenario.hpp"

#include "tidlab/error.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace tidlab {

std::string_view expectation_name(Expectation e)
{
  switch (e)
  {
  case Expectation::Completed:
    return "completed";
  case Expectation::Aborted:
    return "aborted";
  case Expectation::Unrecovered:
    return "unrecovered";
  }
  return "unknown";
}

void Scenario::validate() const
{
  auto fail = [&](std::string const &what) {
    throw Error(ErrorKind::Parse, "scenario '" + name + "': " + what);
  };
  if (n < 2)
  {
    fail("n must be at least 2");
  }
  if (strategies.size() != n)
  {
    fail("expected one strategy per member");
  }
  if (registration_blocks == 0 || distribution_blocks == 0 || dispute_blocks == 0)
  {
    fail("phase lengths must be at least one block");
  }
  std::size_t biasing = 0;
  for (std::size_t k = 0; k < n; ++k)
  {
    auto const &s     = strategies[k];
    auto const  index = static_cast<MemberIndex>(k + 1);
    if (s.kind == StrategyKind::InvalidShadow &&
        (s.target == 0 || s.target > n || s.target == index))
    {
      fail("member " + std::to_string(index) + ": invalid_shadow target out of range");
    }
    if (s.kind == StrategyKind::Biasing)
    {
      ++biasing;
      if (index != n)
      {
        fail("the biasing member must register last (index n)");
      }
    }
  }
  if (biasing > 1)
  {
    fail("at most one biasing member");
  }
  if (reveal == RevealPolicy::Count && reveal_count > n)
  {
    fail("reveal count exceeds n");
  }
  for (auto const &fa : false_accusations)
  {
    if (fa.accuser == 0 || fa.accuser > n || fa.accused == 0 || fa.accused > n ||
        fa.accuser == fa.accused)
    {
      fail("false accusation indices out of range");
    }
  }
}

namespace {

template <typename T>
T scalar_field(YAML::Node const &node, char const *key, T fallback)
{
  YAML::Node v = node[key];
  if (!v)
  {
    return fallback;
  }
  try
  {
    return v.as<T>();
  }
  catch (YAML::Exception const &)
  {
    throw Error(ErrorKind::Parse, std::string{"field '"} + key + "' has the wrong type");
  }
}

Strategy parse_strategy(YAML::Node const &node)
{
  auto const kind = scalar_field<std::string>(node, "strategy", "honest");
  if (kind == "honest")
  {
    return Strategy::honest();
  }
  if (kind == "invalid_shadow")
  {
    return Strategy::invalid_shadow(scalar_field<MemberIndex>(node, "target", 0));
  }
  if (kind == "silent_after_registration")
  {
    return Strategy::silent_after_registration();
  }
  if (kind == "silent_in_reconstruction")
  {
    return Strategy::silent_in_reconstruction();
  }
  if (kind == "biasing")
  {
    auto hex = scalar_field<std::string>(node, "bias", "");
    if (hex.empty())
    {
      throw Error(ErrorKind::Parse, "biasing member needs a 'bias' scalar");
    }
    try
    {
      // short values are read as big-endian integers
      if (hex.size() < 2 * Scalar::kEncodedSize)
      {
        hex.insert(0, 2 * Scalar::kEncodedSize - hex.size(), '0');
      }
      return Strategy::biasing(Scalar::from_hex(hex));
    }
    catch (Error const &e)
    {
      throw Error(ErrorKind::Parse, std::string{"bad bias: "} + e.what());
    }
  }
  throw Error(ErrorKind::Parse, "unknown strategy '" + kind + "'");
}

void parse_reveal(YAML::Node const &node, Scenario &s)
{
  if (!node)
  {
    return;
  }
  auto const text = node.as<std::string>();
  if (text == "all")
  {
    s.reveal = RevealPolicy::All;
  }
  else if (text == "minimal")
  {
    s.reveal = RevealPolicy::Minimal;
  }
  else
  {
    try
    {
      s.reveal       = RevealPolicy::Count;
      s.reveal_count = node.as<std::size_t>();
    }
    catch (YAML::Exception const &)
    {
      throw Error(ErrorKind::Parse, "reveal must be all, minimal or a count");
    }
  }
}

Expectation parse_expectation(YAML::Node const &node)
{
  auto const text = node ? node.as<std::string>() : std::string{"completed"};
  for (auto e : {Expectation::Completed, Expectation::Aborted, Expectation::Unrecovered})
  {
    if (text == expectation_name(e))
    {
      return e;
    }
  }
  throw Error(ErrorKind::Parse, "unknown expectation '" + text + "'");
}

Scenario parse_root(YAML::Node const &root)
{
  if (!root.IsMap())
  {
    throw Error(ErrorKind::Parse, "scenario must be a mapping");
  }
  static std::set<std::string> const known{
      "name",   "n",           "ratio",       "schedule",          "deposit",
      "members", "reveal",     "submissions", "false_accusations", "expect"};
  for (auto const &kv : root)
  {
    if (known.count(kv.first.as<std::string>()) == 0)
    {
      throw Error(ErrorKind::Parse, "unknown key '" + kv.first.as<std::string>() + "'");
    }
  }

  Scenario s;
  s.name = scalar_field<std::string>(root, "name", s.name);
  if (!root["n"])
  {
    throw Error(ErrorKind::Parse, "missing required key 'n'");
  }
  s.n     = scalar_field<std::size_t>(root, "n", 0);
  s.ratio = ThresholdRatio::parse(scalar_field<std::string>(root, "ratio", "1/2"));

  if (auto sched = root["schedule"])
  {
    s.registration_blocks = scalar_field<std::uint64_t>(sched, "registration", s.registration_blocks);
    s.distribution_blocks = scalar_field<std::uint64_t>(sched, "distribution", s.distribution_blocks);
    s.dispute_blocks      = scalar_field<std::uint64_t>(sched, "dispute", s.dispute_blocks);
    s.delta_hold          = scalar_field<std::uint64_t>(sched, "delta_hold", s.delta_hold);
  }
  s.deposit = scalar_field<std::uint64_t>(root, "deposit", s.deposit);

  s.strategies.assign(s.n, Strategy::honest());
  std::set<std::size_t> seen;
  for (auto const &m : root["members"])
  {
    auto const index = scalar_field<std::size_t>(m, "index", 0);
    if (index == 0 || index > s.n || !seen.insert(index).second)
    {
      throw Error(ErrorKind::Parse, "member entries need a distinct index in 1..n");
    }
    s.strategies[index - 1] = parse_strategy(m);
  }

  parse_reveal(root["reveal"], s);

  for (auto const &sub : root["submissions"])
  {
    SubmissionSpec spec;
    if (sub.IsScalar())
    {
      auto const text = sub.as<std::string>();
      spec.literal.assign(text.begin(), text.end());
    }
    else if (sub.IsMap() && sub["random_bytes"])
    {
      spec.is_random    = true;
      spec.random_bytes = scalar_field<std::size_t>(sub, "random_bytes", 0);
    }
    else
    {
      throw Error(ErrorKind::Parse, "submission must be a string or {random_bytes: N}");
    }
    s.submissions.push_back(std::move(spec));
  }

  for (auto const &fa : root["false_accusations"])
  {
    s.false_accusations.push_back(FalseAccusation{scalar_field<MemberIndex>(fa, "accuser", 0),
                                                  scalar_field<MemberIndex>(fa, "accused", 0)});
  }

  s.expect = parse_expectation(root["expect"]);
  s.validate();
  return s;
}

}  // namespace

Scenario parse_scenario(std::string_view text)
{
  try
  {
    return parse_root(YAML::Load(std::string{text}));
  }
  catch (YAML::Exception const &e)
  {
    throw Error(ErrorKind::Parse, std::string{"scenario syntax: "} + e.what());
  }
}

Scenario load_scenario(std::filesystem::path const &path)
{
  std::ifstream in{path};
  if (!in)
  {
    throw Error(ErrorKind::Io, "cannot read scenario " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

Scenario happy_scenario(std::size_t n, ThresholdRatio ratio, std::size_t submissions)
{
  Scenario s;
  s.name  = "happy_" + std::to_string(n) + "_" + std::to_string(ratio.num) + "of" +
           std::to_string(ratio.den);
  s.n     = n;
  s.ratio = ratio;
  s.strategies.assign(n, Strategy::honest());
  for (std::size_t k = 0; k < submissions; ++k)
  {
    SubmissionSpec spec;
    spec.is_random    = true;
    spec.random_bytes = 16 + 40 * k;
    s.submissions.push_back(spec);
  }
  s.validate();
  return s;
}

Scenario sad_scenario(std::size_t n, ThresholdRatio ratio)
{
  Scenario s = happy_scenario(n, ratio);
  s.name     = "sad_" + std::to_string(n) + "_" + std::to_string(ratio.num) + "of" +
           std::to_string(ratio.den);
  s.strategies[2] = Strategy::invalid_shadow(1);
  s.reveal        = RevealPolicy::Minimal;
  s.false_accusations.push_back(FalseAccusation{2, 4});
  s.validate();
  return s;
}

}  // namespace tidlab
