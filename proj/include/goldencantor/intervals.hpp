// Copyright 2026 The goldencantor Authors
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

#ifndef GOLDENCANTOR_INTERVALS_HPP
#define GOLDENCANTOR_INTERVALS_HPP

#include <array>
#include <string>
#include <vector>

#include "goldencantor/words.hpp"

namespace goldencantor {

/// A level-n interval [left, left + phi^-(n-1)]. Level 0 is the root [0, phi].
struct PhiInterval {
  GoldenRational left;
  int level = 0;

  GoldenRational length() const;
  GoldenRational right() const;
};

/// The interval addressed by a word in the value orientation (left endpoint
/// = value_of(w)). Callers holding tree-orientation words must reverse first.
PhiInterval interval_of(const Word& w);

/// Exact |x ∩ y| for same-level intervals; 0 when disjoint.
/// Throws on level mismatch.
GoldenRational intersection_length(const PhiInterval& x, const PhiInterval& y);

/// Deduplicates same-length words by exact left endpoint.
/// Result is sorted by left endpoint.
std::vector<PhiInterval> distinct_intervals(const std::vector<Word>& words);

struct SpectrumReport {
  int n = 0;
  unsigned long long pairs_checked = 0;  // unordered pairs of distinct words
  // counts per admissible length: 0, phi^-(n+1), phi^-n, phi^-(n-1)
  std::array<unsigned long long, 4> counts{};
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks that every pair c != d in {0,1}^n has |I_c ∩ I_d| in the four-value
/// spectrum. Same-value pairs are tallied through interval multiplicities,
/// so the cost is quadratic in the number of distinct intervals. n <= 10.
SpectrumReport verify_intersection_spectrum(int n);

}  // namespace goldencantor

#endif  // GOLDENCANTOR_INTERVALS_HPP
