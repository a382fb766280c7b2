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

#ifndef GOLDENCANTOR_GOLDEN_HPP
#define GOLDENCANTOR_GOLDEN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace goldencantor {

using int128 = __int128;

// The golden mean as a double, for display and estimates only.
inline constexpr double kPhi = 1.6180339887498948482;

std::string to_string_i128(int128 v);
int128 parse_i128(const std::string& s);

/// An element a + b*phi of the ring Z[phi], phi^2 = phi + 1.
///
/// Coefficients are 128-bit signed; every operation checks for overflow and
/// throws std::overflow_error instead of wrapping. Since phi is irrational,
/// (a, b) is unique per real value, so equality is componentwise.
class GoldenInt {
 public:
  constexpr GoldenInt() : a_(0), b_(0) {}
  constexpr GoldenInt(int128 a, int128 b) : a_(a), b_(b) {}

  int128 a() const { return a_; }
  int128 b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  GoldenInt operator+(const GoldenInt& o) const;
  GoldenInt operator-(const GoldenInt& o) const;
  GoldenInt operator-() const;
  // (a + b phi)(a' + b' phi) = (aa' + bb') + (ab' + a'b + bb') phi
  GoldenInt operator*(const GoldenInt& o) const;

  // Multiplication by phi: (a, b) -> (b, a + b). Exact, no general product.
  GoldenInt times_phi() const;
  // Division by phi is exact in Z[phi] (phi is a unit): (a, b) -> (b - a, a).
  GoldenInt div_phi() const;

  /// Exact sign of a + b*phi, using integer arithmetic only.
  int sign() const;

  bool operator==(const GoldenInt&) const = default;
  bool operator<(const GoldenInt& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const GoldenInt& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const GoldenInt& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const GoldenInt& o) const { return (*this - o).sign() >= 0; }

  double to_double() const;
  std::string str() const;  // "a+b·phi"

  /// phi^k for any integer k (negative powers are exact: phi^-1 = phi - 1).
  static GoldenInt phi_pow(int k);

 private:
  int128 a_;
  int128 b_;
};

struct GoldenIntHash {
  std::size_t operator()(const GoldenInt& g) const {
    auto mix = [](std::uint64_t x) {
      x ^= x >> 33;
      x *= 0xff51afd7ed558ccdull;
      x ^= x >> 33;
      return x;
    };
    std::uint64_t h = 0;
    auto fold = [&](int128 v) {
      h = mix(h ^ mix(static_cast<std::uint64_t>(v)));
      h = mix(h ^ mix(static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64)));
    };
    fold(g.a());
    fold(g.b());
    return static_cast<std::size_t>(h);
  }
};

/// A value num * phi^(-scale) with num in Z[phi] and scale >= 0.
///
/// phi is a unit of Z[phi], so the minimal scale is always 0 and the
/// constructor normalizes to it; after that, equality and comparison reduce
/// to GoldenInt. The scale argument exists because values such as
/// sum c_i phi^(-i) are naturally built as an integer combination over a
/// common denominator phi^n.
class GoldenRational {
 public:
  GoldenRational() = default;
  explicit GoldenRational(GoldenInt num, unsigned scale = 0);

  const GoldenInt& num() const { return num_; }
  unsigned scale() const { return scale_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }

  GoldenRational operator+(const GoldenRational& o) const;
  GoldenRational operator-(const GoldenRational& o) const;
  bool operator==(const GoldenRational&) const = default;
  bool operator<(const GoldenRational& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const GoldenRational& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const GoldenRational& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const GoldenRational& o) const { return (*this - o).sign() >= 0; }

  double to_double() const { return num_.to_double(); }
  std::string str() const;  // "a+b·phi @ phi^-k"

 private:
  GoldenInt num_;
  unsigned scale_ = 0;
};

/// Three-way comparison; -1, 0, +1 as x <, =, > y.
int compare(const GoldenRational& x, const GoldenRational& y);

}  // namespace goldencantor

#endif  // GOLDENCANTOR_GOLDEN_HPP
