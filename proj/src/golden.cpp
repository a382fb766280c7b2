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

#include "goldencantor/golden.hpp"

#include <cmath>
#include <stdexcept>

namespace goldencantor {

namespace {

int128 checked_add(int128 x, int128 y) {
  int128 r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("GoldenInt: addition overflow");
  return r;
}

int128 checked_sub(int128 x, int128 y) {
  int128 r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("GoldenInt: subtraction overflow");
  return r;
}

int128 checked_mul(int128 x, int128 y) {
  int128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("GoldenInt: multiplication overflow");
  return r;
}

}  // namespace

std::string to_string_i128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  char buf[48];
  int pos = 48;
  while (u != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string s;
  if (neg) s.push_back('-');
  s.append(buf + pos, 48 - pos);
  return s;
}

int128 parse_i128(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_i128: empty string");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("parse_i128: no digits");
  int128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("parse_i128: bad digit");
    v = checked_add(checked_mul(v, 10), s[i] - '0');
  }
  return neg ? -v : v;
}

GoldenInt GoldenInt::operator+(const GoldenInt& o) const {
  return {checked_add(a_, o.a_), checked_add(b_, o.b_)};
}

GoldenInt GoldenInt::operator-(const GoldenInt& o) const {
  return {checked_sub(a_, o.a_), checked_sub(b_, o.b_)};
}

GoldenInt GoldenInt::operator-() const { return {checked_sub(0, a_), checked_sub(0, b_)}; }

GoldenInt GoldenInt::operator*(const GoldenInt& o) const {
  const int128 bb = checked_mul(b_, o.b_);
  const int128 ra = checked_add(checked_mul(a_, o.a_), bb);
  const int128 rb = checked_add(checked_add(checked_mul(a_, o.b_), checked_mul(o.a_, b_)), bb);
  return {ra, rb};
}

GoldenInt GoldenInt::times_phi() const { return {b_, checked_add(a_, b_)}; }

GoldenInt GoldenInt::div_phi() const { return {checked_sub(b_, a_), a_}; }

int GoldenInt::sign() const {
  // Multiplying by phi > 0 preserves the sign and maps (a, b) to (b, a + b).
  // While the coefficients have mixed signs, |a| + |b| strictly decreases,
  // so the loop reaches a same-sign pair, whose sign is immediate.
  int128 a = a_;
  int128 b = b_;
  for (;;) {
    if (a >= 0 && b >= 0) return (a | b) != 0 ? 1 : 0;
    if (a <= 0 && b <= 0) return (a | b) != 0 ? -1 : 0;
    const int128 t = a + b;  // |a + b| < max(|a|, |b|), no overflow
    a = b;
    b = t;
  }
}

double GoldenInt::to_double() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * kPhi;
}

std::string GoldenInt::str() const {
  return to_string_i128(a_) + "+" + to_string_i128(b_) + "·phi";
}

GoldenInt GoldenInt::phi_pow(int k) {
  GoldenInt r{1, 0};
  if (k >= 0) {
    for (int i = 0; i < k; ++i) r = r.times_phi();
  } else {
    for (int i = 0; i < -k; ++i) r = r.div_phi();
  }
  return r;
}

GoldenRational::GoldenRational(GoldenInt num, unsigned scale) : num_(num), scale_(scale) {
  while (scale_ > 0) {
    num_ = num_.div_phi();
    --scale_;
  }
}

GoldenRational GoldenRational::operator+(const GoldenRational& o) const {
  return GoldenRational(num_ + o.num_);
}

GoldenRational GoldenRational::operator-(const GoldenRational& o) const {
  return GoldenRational(num_ - o.num_);
}

std::string GoldenRational::str() const {
  return num_.str() + " @ phi^-" + std::to_string(scale_);
}

int compare(const GoldenRational& x, const GoldenRational& y) { return (x - y).sign(); }

}  // namespace goldencantor
