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

#ifndef ZVLAB_SPIN_H
#define ZVLAB_SPIN_H

#include <cstdint>
#include <vector>

namespace zvlab {

/// Length-L string of +/-1 spins. Spin k is bit k of the basis index, with
/// bit 0 meaning +1 and bit 1 meaning -1.
class SpinConfiguration {
 public:
  SpinConfiguration() = default;
  SpinConfiguration(int length, std::uint64_t index);

  static SpinConfiguration from_spins(const std::vector<int>& spins);
  static SpinConfiguration all_up(int length) { return {length, 0}; }

  int length() const { return length_; }
  std::uint64_t index() const { return index_; }
  int spin(int k) const { return ((index_ >> k) & 1U) ? -1 : 1; }
  std::vector<int> spins() const;

  SpinConfiguration flipped(int k) const { return {length_, index_ ^ (std::uint64_t{1} << k)}; }
  /// Global spin flip.
  SpinConfiguration inverted() const;
  /// Cyclic shift by one site: new spin k is old spin k-1.
  SpinConfiguration shifted() const;
  int magnetization() const;

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  int length_ = 0;
  std::uint64_t index_ = 0;
};

}  // namespace zvlab

#endif  // ZVLAB_SPIN_H
