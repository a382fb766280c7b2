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

#ifndef GOLDENCANTOR_WORDS_HPP
#define GOLDENCANTOR_WORDS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "goldencantor/golden.hpp"

namespace goldencantor {

/// A finite binary word, most-significant digit first:
/// value = sum_i digits[i] * phi^-(i+1). Length is significant (0 != 00).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> digits);
  static Word parse(std::string_view s);  // string of '0'/'1'
  static Word zeros(std::size_t n);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  void push_back(std::uint8_t d) { digits_.push_back(d); }
  void pop_back() { digits_.pop_back(); }
  void reserve(std::size_t n) { digits_.reserve(n); }

  Word reversed() const;
  std::string str() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;  // lexicographic

 private:
  std::vector<std::uint8_t> digits_;
};

/// Exact value sum_i w_i phi^-i; the empty word has value 0.
GoldenRational value_of(const Word& w);

/// True iff the forbidden factor 011 does not occur in w.
bool is_greedy(const Word& w);

/// The unique greedy word of the same length and value, obtained by
/// repeatedly rewriting the leftmost occurrence of 011 to 100.
Word normalize_to_greedy(Word w);

/// Number of trailing zeros after the last 1; -1 for an all-zero word.
/// Rejects non-greedy input.
int suffix_class(const Word& w);

/// Counts of greedy length-n words by suffix class h in {-1, 0, ..., n-1}.
struct LevelPartition {
  int n = 0;
  std::vector<unsigned long long> counts;  // index h + 1

  unsigned long long count_for(int h) const { return counts.at(static_cast<std::size_t>(h + 1)); }
  unsigned long long total() const;
  // #G_n^0 (ends in 1) and the complementary ends-in-0 family; the two
  // closed forms are F_{n+1} and F_{n+2}-1.
  unsigned long long ends_in_one() const { return n == 0 ? 0 : count_for(0); }
  unsigned long long ends_in_zero() const { return total() - ends_in_one(); }
};

namespace detail {

// Forbidden-factor automaton for 011. States: 0 = no useful suffix,
// 1 = suffix "0", 2 = suffix "01". Appending 1 in state 2 is forbidden.
inline int automaton_step(int state, int digit) {
  if (digit == 0) return 1;
  return state == 1 ? 2 : 0;
}

template <typename Visitor>
void greedy_dfs(int n, int depth, int state, int trailing_zeros, bool any_one, Word& w,
                LevelPartition& part, Visitor& visit) {
  if (depth == n) {
    const int h = any_one ? trailing_zeros : -1;
    ++part.counts[static_cast<std::size_t>(h + 1)];
    visit(const_cast<const Word&>(w));
    return;
  }
  w.push_back(0);
  greedy_dfs(n, depth + 1, automaton_step(state, 0), any_one ? trailing_zeros + 1 : 0, any_one, w,
             part, visit);
  w.pop_back();
  if (state != 2) {
    w.push_back(1);
    greedy_dfs(n, depth + 1, automaton_step(state, 1), 0, true, w, part, visit);
    w.pop_back();
  }
}

}  // namespace detail

/// Visits every word of G_n exactly once, in lexicographic order, and
/// returns the level partition tallied along the way.
template <typename Visitor>
LevelPartition for_each_greedy(int n, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_greedy: n must be >= 0");
  LevelPartition part;
  part.n = n;
  part.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  detail::greedy_dfs(n, 0, 0, 0, false, w, part, visit);
  return part;
}

std::vector<Word> greedy_words(int n);
LevelPartition level_partition(int n);

/// F_0 = 0, F_1 = 1, F_{n+2} = F_{n+1} + F_n; capped at n = 180.
int128 fibonacci(int n);

}  // namespace goldencantor

#endif  // GOLDENCANTOR_WORDS_HPP
