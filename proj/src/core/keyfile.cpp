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

#include "tidlab/keyfile.hpp"

#include "tidlab/error.hpp"

#include <fstream>
#include <string>

namespace tidlab {
namespace {

std::string header(std::string_view kind)
{
  return "tidlab-" + std::string{kind} + " " + std::string{group_context().name};
}

std::string const kMpkKind = "mpk";
std::string const kMskKind = "msk";

void write_key(std::filesystem::path const &path, std::string const &head, std::string const &hex)
{
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  if (!out)
  {
    throw Error(ErrorKind::Io, "cannot write " + path.string());
  }
  out << head << '\n' << hex << '\n';
  if (!out)
  {
    throw Error(ErrorKind::Io, "write failed for " + path.string());
  }
}

std::string read_key(std::filesystem::path const &path, std::string const &head)
{
  std::ifstream in{path};
  if (!in)
  {
    throw Error(ErrorKind::Io, "cannot read " + path.string());
  }
  std::string first, second;
  std::getline(in, first);
  std::getline(in, second);
  if (first != head)
  {
    throw Error(ErrorKind::Parse,
                path.string() + ": expected header '" + head + "', got '" + first + "'");
  }
  return second;
}

}  // namespace

void write_mpk_file(std::filesystem::path const &path, GroupElement const &mpk)
{
  write_key(path, header(kMpkKind), to_hex(mpk.encode()));
}

void write_msk_file(std::filesystem::path const &path, Scalar const &msk)
{
  write_key(path, header(kMskKind), msk.to_hex());
}

GroupElement read_mpk_file(std::filesystem::path const &path)
{
  auto hex = read_key(path, header(kMpkKind));
  try
  {
    return GroupElement::from_hex(hex);
  }
  catch (Error const &e)
  {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

Scalar read_msk_file(std::filesystem::path const &path)
{
  auto hex = read_key(path, header(kMskKind));
  try
  {
    return Scalar::from_hex(hex);
  }
  catch (Error const &e)
  {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

}  // namespace tidlab
