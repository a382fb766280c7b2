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

#include "goldencantor/classes.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace goldencantor {

namespace {

// Exact sign of x + y*phi for small integer coefficients.
int small_sign(std::int64_t x, std::int64_t y) {
  if (x >= 0 && y >= 0) return (x | y) != 0 ? 1 : 0;
  if (x <= 0 && y <= 0) return (x | y) != 0 ? -1 : 0;
  // mixed signs: sign of (2x + y) + y*sqrt(5)
  const std::int64_t s = 2 * x + y;
  if (s >= 0 && y > 0) return 1;
  if (s <= 0 && y < 0) return -1;
  const std::int64_t lhs = s * s;
  const std::int64_t rhs = 5 * y * y;
  if (lhs == rhs) return 0;  // cannot happen for y != 0, kept for safety
  const bool s_dominates = lhs > rhs;
  return (s > 0) == s_dominates ? 1 : -1;
}

// |x + y*phi| < phi, i.e. the prefix difference can still be canceled by a
// remaining tail (tails are strictly below phi in absolute value).
bool viable(std::int64_t x, std::int64_t y) {
  return small_sign(x, 1 - y) > 0 && small_sign(x, 1 + y) > 0;
}

struct DpState {
  std::int64_t a;
  std::int64_t b;
  unsigned long long count;
};

// Running states of the prefix-difference DP. The viable difference set is a
// handful of lattice points (|value| < phi and the conjugate stays bounded),
// so a flat vector with linear lookup beats any map.
class DpStates {
 public:
  void reset() { states_.clear(); }

  void add(std::int64_t a, std::int64_t b, unsigned long long count) {
    for (auto& s : states_) {
      if (s.a == a && s.b == b) {
        s.count += count;
        return;
      }
    }
    states_.push_back({a, b, count});
  }

  const std::vector<DpState>& get() const { return states_; }
  void swap(DpStates& o) { states_.swap(o.states_); }

 private:
  std::vector<DpState> states_;
};

// One DP step: difference d -> d*phi + (w_digit - candidate_digit).
void dp_step(const DpStates& cur, int w_digit, DpStates& next) {
  next.reset();
  for (const auto& s : cur.get()) {
    const std::int64_t pa = s.b;  // (a, b) * phi = (b, a + b)
    const std::int64_t pb = s.a + s.b;
    for (int d = 0; d <= 1; ++d) {
      const std::int64_t na = pa + w_digit - d;
      if (viable(na, pb)) next.add(na, pb, s.count);
    }
  }
}

unsigned long long run_multiplicity_dp(const Word& w) {
  DpStates cur;
  DpStates next;
  cur.add(0, 0, 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    dp_step(cur, w[i], next);
    cur.swap(next);
  }
  for (const auto& s : cur.get()) {
    if (s.a == 0 && s.b == 0) return s.count;
  }
  return 0;
}

using ValueKey = GoldenInt;
using ValueCountMap = std::unordered_map<ValueKey, unsigned long long, GoldenIntHash>;

// Exact value of every word in {0,1}^n, grouped. 2^n work.
ValueCountMap value_counts(int n) {
  if (n < 0 || n > 26) throw std::invalid_argument("value_counts: n out of range");
  ValueCountMap m;
  std::vector<GoldenInt> pow(static_cast<std::size_t>(n) + 1);
  pow[0] = {1, 0};
  for (int i = 1; i <= n; ++i) pow[static_cast<std::size_t>(i)] = pow[static_cast<std::size_t>(i - 1)].times_phi();
  // value * phi^n = sum over set bits i (1-based) of phi^(n-i)
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    GoldenInt v{0, 0};
    for (int i = 0; i < n; ++i) {
      if (bits & (1ull << i)) v = v + pow[static_cast<std::size_t>(i)];  // digit n-i has weight phi^i... see below
    }
    ++m[v];
  }
  return m;
}

GoldenInt scaled_value(const Word& w) {
  // value_of(w) * phi^|w| as a GoldenInt (no normalization), used as a
  // grouping key; same length => same scaling, so equal keys iff equal value.
  GoldenInt v{0, 0};
  GoldenInt p{1, 0};
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i]) v = v + p;
    p = p.times_phi();
  }
  return v;
}

}  // namespace

unsigned long long MultiplicityHistogram::total_classes() const {
  unsigned long long t = 0;
  for (const auto& [m, c] : counts) t += c;
  return t;
}

unsigned long long MultiplicityHistogram::total_words() const {
  unsigned long long t = 0;
  for (const auto& [m, c] : counts) t += m * c;
  return t;
}

unsigned long long multiplicity(const Word& w) {
  if (w.size() > 60) throw std::invalid_argument("multiplicity: |w| > 60");
  return run_multiplicity_dp(w);
}

ClassRecord class_members_oracle(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n > 20) throw std::invalid_argument("class_members_oracle: |w| > 20");
  ClassRecord rec;
  rec.rep = normalize_to_greedy(w);
  const GoldenInt target = scaled_value(w);
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    Word cand;
    cand.reserve(w.size());
    for (int i = 0; i < n; ++i) cand.push_back((bits >> (n - 1 - i)) & 1u);
    if (scaled_value(cand) == target) rec.members.push_back(std::move(cand));
  }
  std::sort(rec.members.begin(), rec.members.end());
  rec.multiplicity = rec.members.size();
  return rec;
}

std::vector<ClassRecord> all_classes(int n, bool with_members) {
  if (n < 0 || n > 20) throw std::invalid_argument("all_classes: n out of [0, 20]");
  std::unordered_map<GoldenInt, std::vector<Word>, GoldenIntHash> groups;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Word cand;
    cand.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cand.push_back((bits >> (n - 1 - i)) & 1u);
    groups[scaled_value(cand)].push_back(std::move(cand));
  }
  std::vector<ClassRecord> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) {
    ClassRecord rec;
    std::sort(members.begin(), members.end());
    rec.multiplicity = members.size();
    rec.rep = members.back();  // the greedy representative is the lex max
    if (with_members) rec.members = std::move(members);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const ClassRecord& x, const ClassRecord& y) { return x.rep < y.rep; });
  return out;
}

MultiplicityHistogram histogram(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("histogram: n out of [0, 30]");
  MultiplicityHistogram h;
  h.n = n;
  for_each_greedy(n, [&](const Word& w) { ++h.counts[run_multiplicity_dp(w)]; });
  return h;
}

Prop2Report check_prop2(int n, bool oracle_backed) {
  if (n < 0) throw std::invalid_argument("check_prop2: n < 0");
  if (oracle_backed && n > 14) throw std::invalid_argument("check_prop2: oracle mode capped at n <= 14");
  if (!oracle_backed && n > 18) throw std::invalid_argument("check_prop2: DP mode capped at n <= 18");

  Prop2Report rep;
  rep.n = n;

  ValueCountMap m0, m1, m2;
  if (oracle_backed) {
    m0 = value_counts(n);
    m1 = value_counts(n + 1);
    m2 = value_counts(n + 2);
  }
  auto size_of = [&](const Word& w) -> unsigned long long {
    if (!oracle_backed) return run_multiplicity_dp(w);
    const ValueCountMap& m = w.size() == static_cast<std::size_t>(n)       ? m0
                             : w.size() == static_cast<std::size_t>(n) + 1 ? m1
                                                                           : m2;
    return m.at(scaled_value(w));
  };

  for_each_greedy(n, [&](const Word& c) {
    const unsigned long long base = size_of(c);
    const std::size_t len = c.size();
    const bool ends_01 = len >= 2 && c[len - 2] == 0 && c[len - 1] == 1;
    if (!ends_01) {  // c1 stays greedy and lands in G^0_{n+1}
      Word c1 = c;
      c1.push_back(1);
      ++rep.checked_append_one;
      if (size_of(c1) != base) rep.violations.push_back("(i) " + c.str());
    }
    if (len >= 1 && c[len - 1] == 1) {  // c0 lands in G^1_{n+1}
      Word c0 = c;
      c0.push_back(0);
      ++rep.checked_append_zero;
      if (size_of(c0) != base) rep.violations.push_back("(ii) " + c.str());
    }
    bool any_one = false;
    for (std::size_t i = 0; i < len; ++i) any_one |= c[i] != 0;
    if (any_one) {  // c in G_n^h with h >= 0
      Word c00 = c;
      c00.push_back(0);
      c00.push_back(0);
      ++rep.checked_append_two_zeros;
      if (size_of(c00) < base + 1) rep.violations.push_back("(iii) " + c.str());
    }
  });
  return rep;
}

}  // namespace goldencantor
