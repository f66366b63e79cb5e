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

#include "tidlab/error.hpp"
#include "tidlab/keyfile.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace tidlab;

namespace {

std::filesystem::path scratch(std::string const &name)
{
  auto dir = std::filesystem::temp_directory_path() / "tidlab_keyfile_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_text(std::filesystem::path const &p, std::string const &text)
{
  std::ofstream{p} << text;
}

}  // namespace

TEST_CASE("key files round trip", "[keyfile]")
{
  Scalar const msk = Scalar::from_u64(123456789);
  auto const   mpk = generator_exp(msk);
  write_mpk_file(scratch("a.mpk"), mpk);
  write_msk_file(scratch("a.msk"), msk);
  CHECK(read_mpk_file(scratch("a.mpk")) == mpk);
  CHECK(read_msk_file(scratch("a.msk")) == msk);

  std::ifstream in{scratch("a.msk")};
  std::string   header;
  std::getline(in, header);
  CHECK(header == "tidlab-msk bn254-g1");
}

TEST_CASE("bad key files", "[keyfile]")
{
  auto kind = [](auto fn) {
    try
    {
      fn();
    }
    catch (Error const &e)
    {
      return e.kind();
    }
    return ErrorKind::Invariant;
  };
  CHECK(kind([] { read_msk_file("/nonexistent/key"); }) == ErrorKind::Io);

  write_msk_file(scratch("swap.msk"), Scalar::from_u64(1));
  CHECK(kind([] { read_mpk_file(scratch("swap.msk")); }) == ErrorKind::Parse);

  write_text(scratch("junk.msk"), "tidlab-msk bn254-g1\nzz\n");
  CHECK(kind([] { read_msk_file(scratch("junk.msk")); }) == ErrorKind::Parse);

  write_text(scratch("offcurve.mpk"), "tidlab-mpk bn254-g1\n" + std::string(127, '0') + "1\n");
  CHECK(kind([] { read_mpk_file(scratch("offcurve.mpk")); }) == ErrorKind::Parse);
}
