// Copyright 2026 The Scribe Authors
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

#include <chrono>

namespace scribe {

/// Accumulates wall time over scoped laps.
class Stopwatch {
 public:
  using Clock = std::chrono::steady_clock;

  class Lap {
   public:
    explicit Lap(Stopwatch& owner) : owner_(owner), start_(Clock::now()) {}
    ~Lap() { owner_.total_ += Clock::now() - start_; }
    Lap(const Lap&) = delete;
    Lap& operator=(const Lap&) = delete;

   private:
    Stopwatch& owner_;
    Clock::time_point start_;
  };

  [[nodiscard]] Lap lap() { return Lap(*this); }
  double ms() const { return std::chrono::duration<double, std::milli>(total_).count(); }

 private:
  Clock::duration total_{};
};

}  // namespace scribe
