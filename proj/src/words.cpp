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

#include "goldencantor/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace goldencantor {

Word::Word(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  for (auto d : digits_) {
    if (d > 1) throw std::invalid_argument("Word: digits must be 0 or 1");
  }
}

Word Word::parse(std::string_view s) {
  std::vector<std::uint8_t> d;
  d.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("Word::parse: expected only 0/1");
    d.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(d));
}

Word Word::zeros(std::size_t n) { return Word(std::vector<std::uint8_t>(n, 0)); }

Word Word::reversed() const {
  std::vector<std::uint8_t> d(digits_.rbegin(), digits_.rend());
  return Word(std::move(d));
}

std::string Word::str() const {
  std::string s;
  s.reserve(digits_.size());
  for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
  return s;
}

GoldenRational value_of(const Word& w) {
  // sum w_i phi^-i = (sum w_i phi^(n-i)) * phi^-n
  GoldenInt num{0, 0};
  GoldenInt p{1, 0};  // phi^(n-i), built from the last digit backwards
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i]) num = num + p;
    p = p.times_phi();
  }
  return GoldenRational(num, static_cast<unsigned>(w.size()));
}

bool is_greedy(const Word& w) {
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (w[i - 2] == 0 && w[i - 1] == 1 && w[i] == 1) return false;
  }
  return true;
}

Word normalize_to_greedy(Word w) {
  // 011 -> 100 keeps length and value (phi^-(i+1) + phi^-(i+2) = phi^-i) and
  // strictly increases the word lexicographically, so this terminates.
  std::vector<std::uint8_t> d = w.digits();
  std::size_t i = 0;
  while (i + 2 < d.size()) {
    if (d[i] == 0 && d[i + 1] == 1 && d[i + 2] == 1) {
      d[i] = 1;
      d[i + 1] = 0;
      d[i + 2] = 0;
      // a new occurrence can end at most two positions to the left
      i = i >= 2 ? i - 2 : 0;
    } else {
      ++i;
    }
  }
  return Word(std::move(d));
}

int suffix_class(const Word& w) {
  if (!is_greedy(w)) throw std::domain_error("suffix_class: word is not greedy");
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i]) return static_cast<int>(w.size() - 1 - i);
  }
  return -1;
}

unsigned long long LevelPartition::total() const {
  unsigned long long t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::vector<Word> greedy_words(int n) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(fibonacci(n + 3) - 1));
  for_each_greedy(n, [&](const Word& w) { out.push_back(w); });
  return out;
}

LevelPartition level_partition(int n) {
  return for_each_greedy(n, [](const Word&) {});
}

int128 fibonacci(int n) {
  if (n < 0 || n > 180) throw std::overflow_error("fibonacci: n out of [0, 180]");
  int128 a = 0;
  int128 b = 1;
  for (int i = 0; i < n; ++i) {
    const int128 t = a + b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace goldencantor
