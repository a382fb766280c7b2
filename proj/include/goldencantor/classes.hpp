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

#ifndef GOLDENCANTOR_CLASSES_HPP
#define GOLDENCANTOR_CLASSES_HPP

#include <map>
#include <string>
#include <vector>

#include "goldencantor/words.hpp"

namespace goldencantor {

/// A value class: greedy representative, class size, and (when produced by
/// the brute-force oracle) the full member list.
struct ClassRecord {
  Word rep;
  unsigned long long multiplicity = 0;
  std::vector<Word> members;  // empty unless filled by an oracle
};

/// N_n(m): number of classes of multiplicity m at level n.
struct MultiplicityHistogram {
  int n = 0;
  std::map<unsigned long long, unsigned long long> counts;

  unsigned long long total_classes() const;
  unsigned long long total_words() const;  // sum_m m * N_n(m), equals 2^n
};

/// Class size #[w], by digit dynamic programming over the scaled prefix
/// difference. Exact for |w| <= 60.
unsigned long long multiplicity(const Word& w);

/// Exhaustive enumeration of all words with value_of equal to value_of(w).
/// Cost 2^|w|; capped at |w| <= 20. Members come out in lexicographic order.
ClassRecord class_members_oracle(const Word& w);

/// All classes at level n via a single pass over {0,1}^n grouped by exact
/// value, sorted by representative. Capped at n <= 20.
std::vector<ClassRecord> all_classes(int n, bool with_members);

/// Multiplicity histogram at level n (DP per greedy word). Capped at n <= 30.
MultiplicityHistogram histogram(int n);

struct Prop2Report {
  int n = 0;
  unsigned long long checked_append_one = 0;
  unsigned long long checked_append_zero = 0;
  unsigned long long checked_append_two_zeros = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks, over all greedy words of length n:
///  (i)  appending 1 (where the result stays greedy) preserves #[.];
///  (ii) appending 0 to a word ending in 1 preserves #[.];
///  (iii) appending 00 to a word containing a 1 grows #[.] by at least 1.
/// oracle_backed selects exhaustive counting (n <= 14) over the DP.
Prop2Report check_prop2(int n, bool oracle_backed);

}  // namespace goldencantor

#endif  // GOLDENCANTOR_CLASSES_HPP
