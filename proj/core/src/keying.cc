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

#include "derivkey/keying.h"

#include <charconv>
#include <cmath>

#include "derivkey/error.h"
#include "text_util.h"

namespace derivkey {
namespace {

template <typename Int>
bool ParseInt(std::string_view s, Int& out) {
  s = internal::Trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

SelectionPolicy ParseSelectionPolicy(std::string_view text) {
  text = internal::Trim(text);
  if (text == "max-abs-real") return policy::MaxAbsReal{};
  if (text == "min-real") return policy::MinReal{};
  if (text.starts_with("index:")) {
    std::size_t k = 0;
    if (ParseInt(text.substr(6), k)) return policy::Index{k};
  } else if (text.starts_with("seeded:")) {
    std::uint64_t seed = 0;
    if (ParseInt(text.substr(7), seed)) return policy::SeededRandom{seed};
  }
  Fail(ErrorCode::kInvalidConfig, "unknown selection policy '" + std::string(text) + "'");
}

std::string FormatSelectionPolicy(const SelectionPolicy& policy) {
  struct Visitor {
    std::string operator()(const policy::MaxAbsReal&) const { return "max-abs-real"; }
    std::string operator()(const policy::MinReal&) const { return "min-real"; }
    std::string operator()(const policy::Index& p) const { return "index:" + std::to_string(p.k); }
    std::string operator()(const policy::SeededRandom& p) const {
      return "seeded:" + std::to_string(p.seed);
    }
  };
  return std::visit(Visitor{}, policy);
}

double SelectEigenvalue(const EigenSet& spectrum, const SelectionPolicy& policy,
                        double imag_tol) {
  if (spectrum.empty()) Fail(ErrorCode::kComplexSpectrum, "empty spectrum");
  EigenSet ordered = spectrum;
  SortCanonical(ordered);
  std::vector<double> eligible;
  for (const auto& v : ordered) {
    if (std::abs(v.imag()) <= imag_tol * (1.0 + std::abs(v))) eligible.push_back(v.real());
  }
  if (eligible.empty()) {
    Fail(ErrorCode::kComplexSpectrum, "spectrum has no real eigenvalue");
  }

  struct Visitor {
    const std::vector<double>& eligible;
    double operator()(const policy::MaxAbsReal&) const {
      double best = eligible.front();
      for (double v : eligible) {
        if (std::abs(v) > std::abs(best) || (std::abs(v) == std::abs(best) && v > best)) best = v;
      }
      return best;
    }
    double operator()(const policy::MinReal&) const {
      // Canonical order is descending.
      return eligible.back();
    }
    double operator()(const policy::Index& p) const {
      if (p.k >= eligible.size()) {
        Fail(ErrorCode::kIndexOutOfRange,
             "eigenvalue index " + std::to_string(p.k) + " out of range (" +
                 std::to_string(eligible.size()) + " real eigenvalues)");
      }
      return eligible[p.k];
    }
    double operator()(const policy::SeededRandom& p) const {
      KeystreamState gen(p.seed);
      unsigned __int128 wide =
          static_cast<unsigned __int128>(gen.NextState()) * eligible.size();
      return eligible[static_cast<std::size_t>(wide >> 64)];
    }
  };
  return std::visit(Visitor{eligible}, policy);
}

std::string KeyScalar::ToString() const {
  return std::to_string(value) + "/" + std::to_string(scale);
}

KeyScalar KeyScalar::Parse(std::string_view text) {
  text = internal::Trim(text);
  auto slash = text.find('/');
  KeyScalar key;
  if (slash == std::string_view::npos || !ParseInt(text.substr(0, slash), key.value) ||
      !ParseInt(text.substr(slash + 1), key.scale) || key.scale <= 0) {
    Fail(ErrorCode::kSyntax, "key must look like 'value/scale', got '" + std::string(text) + "'");
  }
  if (key.value == 0) Fail(ErrorCode::kZeroKey, "key value 0 is not a usable secret");
  return key;
}

KeyScalar DeriveKeyScalar(double lambda, std::int64_t scale) {
  if (scale <= 0) Fail(ErrorCode::kInvalidArgument, "key scale must be positive");
  if (!std::isfinite(lambda)) Fail(ErrorCode::kOverflow, "eigenvalue is not finite");
  const double rounded = std::round(lambda * static_cast<double>(scale));
  // 2^63 is exactly representable; everything strictly inside fits int64.
  constexpr double kLimit = 9223372036854775808.0;
  if (!(std::abs(rounded) < kLimit)) {
    Fail(ErrorCode::kOverflow, "quantized key exceeds the signed 64-bit range");
  }
  if (rounded == 0.0) {
    Fail(ErrorCode::kZeroKey, "eigenvalue rounds to a zero key at scale " + std::to_string(scale));
  }
  return KeyScalar{static_cast<std::int64_t>(rounded), scale};
}

std::vector<std::uint8_t> Keystream(const KeyScalar& key, std::size_t length) {
  std::vector<std::uint8_t> out(length);
  KeystreamState state(key);
  for (auto& b : out) b = state.NextByte();
  return out;
}

void XorTransformInPlace(std::span<std::uint8_t> data, const KeyScalar& key) {
  KeystreamState state(key);
  for (auto& b : data) b ^= state.NextByte();
}

std::vector<std::uint8_t> XorTransform(std::span<const std::uint8_t> data,
                                       const KeyScalar& key) {
  std::vector<std::uint8_t> out(data.begin(), data.end());
  XorTransformInPlace(out, key);
  return out;
}

}  // namespace derivkey
