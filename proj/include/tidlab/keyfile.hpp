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

#include "tidlab/group.hpp"

#include <filesystem>

// Single-value key files: a one-line type header followed by the hex encoding.
//
//   tidlab-mpk bn254-g1
//   <128 hex chars>

namespace tidlab {

void write_mpk_file(std::filesystem::path const &path, GroupElement const &mpk);
void write_msk_file(std::filesystem::path const &path, Scalar const &msk);

/// Throw Error(Io) if unreadable, Error(Parse) on a wrong header or bad value.
GroupElement read_mpk_file(std::filesystem::path const &path);
Scalar       read_msk_file(std::filesystem::path const &path);

}  // namespace tidlab
