// Copyright 2026 The zvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zvlab/spin.h"

#include <bit>

#include "zvlab/errors.h"

namespace zvlab {
namespace {

std::uint64_t mask_of(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

}  // namespace

SpinConfiguration::SpinConfiguration(int length, std::uint64_t index)
    : length_(length), index_(index) {
  if (length < 1 || length > 64) throw DimensionError("spin chain length must be in [1, 64]");
  if ((index & ~mask_of(length)) != 0) throw DimensionError("basis index exceeds 2^L");
}

SpinConfiguration SpinConfiguration::from_spins(const std::vector<int>& spins) {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < spins.size(); ++k) {
    if (spins[k] == -1) {
      index |= std::uint64_t{1} << k;
    } else if (spins[k] != 1) {
      throw DimensionError("spins must be +1 or -1");
    }
  }
  return {static_cast<int>(spins.size()), index};
}

std::vector<int> SpinConfiguration::spins() const {
  std::vector<int> out(static_cast<std::size_t>(length_));
  for (int k = 0; k < length_; ++k) out[static_cast<std::size_t>(k)] = spin(k);
  return out;
}

SpinConfiguration SpinConfiguration::inverted() const {
  return {length_, index_ ^ mask_of(length_)};
}

SpinConfiguration SpinConfiguration::shifted() const {
  const std::uint64_t top = (index_ >> (length_ - 1)) & 1U;
  return {length_, ((index_ << 1) | top) & mask_of(length_)};
}

int SpinConfiguration::magnetization() const {
  return length_ - 2 * std::popcount(index_);
}

}  // namespace zvlab
