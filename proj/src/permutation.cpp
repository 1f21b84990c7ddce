// Copyright 2026 The permclass authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permclass/permutation.hpp"

#include <numeric>

namespace permclass {

namespace {
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

Permutation::Permutation(std::vector<std::size_t> mapping) : map_(std::move(mapping)) {
  if (!is_power_of_two(map_.size()))
    throw InvalidCircuit("permutation size must be a power of two");
  std::vector<bool> hit(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || hit[v])
      throw InvalidCircuit("permutation mapping is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t j = 0; j < map_.size(); ++j) inv[map_[j]] = j;
  return Permutation(std::move(inv));
}

Permutation identity_permutation(std::uint32_t num_qubits) {
  std::vector<std::size_t> map(std::size_t{1} << num_qubits);
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation mct_permutation(std::uint32_t num_controls) {
  std::vector<std::size_t> map(std::size_t{1} << (num_controls + 1));
  std::iota(map.begin(), map.end(), 0);
  std::swap(map[map.size() - 2], map[map.size() - 1]);
  return Permutation(std::move(map));
}

}  // namespace permclass
