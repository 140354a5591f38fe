// Copyright 2026 The derivkey Authors
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

// Eigenvalue selection, key quantization and the keystream cipher.
//
// The cipher is a 64-bit LCG (multiplier 6364136223846793005, increment
// 1442695040888963407) seeded with the key value; each step emits the top
// byte of the state. It is bit-exact and portable and provides no
// cryptographic security whatsoever.

#ifndef DERIVKEY_KEYING_H_
#define DERIVKEY_KEYING_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "derivkey/linalg.h"

namespace derivkey {

namespace policy {
struct MaxAbsReal {
  friend bool operator==(const MaxAbsReal&, const MaxAbsReal&) = default;
};
struct MinReal {
  friend bool operator==(const MinReal&, const MinReal&) = default;
};
struct Index {
  std::size_t k = 0;
  friend bool operator==(const Index&, const Index&) = default;
};
struct SeededRandom {
  std::uint64_t seed = 0;
  friend bool operator==(const SeededRandom&, const SeededRandom&) = default;
};
}  // namespace policy

using SelectionPolicy =
    std::variant<policy::MaxAbsReal, policy::MinReal, policy::Index, policy::SeededRandom>;

// "max-abs-real", "min-real", "index:<k>", "seeded:<seed>".
SelectionPolicy ParseSelectionPolicy(std::string_view text);
std::string FormatSelectionPolicy(const SelectionPolicy& policy);

inline constexpr double kDefaultImagTolerance = 1e-9;

// Picks among the eigenvalues with |im| <= imag_tol * (1 + |lambda|), taken
// in canonical order. Throws kComplexSpectrum when none qualify and
// kIndexOutOfRange for an Index past the eligible count.
double SelectEigenvalue(const EigenSet& spectrum, const SelectionPolicy& policy,
                        double imag_tol = kDefaultImagTolerance);

inline constexpr std::int64_t kDefaultKeyScale = 1000;

struct KeyScalar {
  std::int64_t value = 0;
  std::int64_t scale = 1;

  // "value/scale"
  std::string ToString() const;
  static KeyScalar Parse(std::string_view text);

  friend bool operator==(const KeyScalar&, const KeyScalar&) = default;
};

// value = round-half-away-from-zero(lambda * scale). Throws kOverflow,
// kZeroKey, or kInvalidArgument for a non-positive scale.
KeyScalar DeriveKeyScalar(double lambda, std::int64_t scale = kDefaultKeyScale);

class KeystreamState {
 public:
  explicit KeystreamState(std::uint64_t seed) : s_(seed) {}
  explicit KeystreamState(const KeyScalar& key)
      : s_(static_cast<std::uint64_t>(key.value)) {}

  std::uint64_t NextState() {
    s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return s_;
  }
  std::uint8_t NextByte() { return static_cast<std::uint8_t>(NextState() >> 56); }
  std::uint64_t state() const { return s_; }

 private:
  std::uint64_t s_;
};

std::vector<std::uint8_t> Keystream(const KeyScalar& key, std::size_t length);

// Encryption and decryption are the same operation.
std::vector<std::uint8_t> XorTransform(std::span<const std::uint8_t> data,
                                       const KeyScalar& key);
void XorTransformInPlace(std::span<std::uint8_t> data, const KeyScalar& key);

}  // namespace derivkey

#endif  // DERIVKEY_KEYING_H_
