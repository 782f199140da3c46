// Copyright 2026 The Stabsim Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace stabsim {

// Measurement randomness is always drawn through this interface so tests can
// inject scripted bits.
class RandomBitSource {
 public:
  virtual ~RandomBitSource() = default;
  virtual bool next_bit() = 0;
};

// Seeded deterministic generator.  The simulator never owns global
// randomness; callers construct one of these and pass it down.  Bit draws are
// buffered from 64-bit engine outputs (low bit first); word draws bypass the
// bit buffer.  Both are fully determined by the seed and the call sequence.
class Rng final : public RandomBitSource {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  bool next_bit() override {
    if (bits_left_ == 0) {
      buffer_ = engine_();
      bits_left_ = 64;
    }
    const bool b = (buffer_ & 1) != 0;
    buffer_ >>= 1;
    --bits_left_;
    return b;
  }

  std::uint64_t next_word() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned bits_left_ = 0;
};

// Stateless 64-bit mixer, used to derive independent per-task seeds from a
// base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b) {
  return splitmix64(splitmix64(base ^ splitmix64(a)) ^ b);
}

}  // namespace stabsim
