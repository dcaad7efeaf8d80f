// Copyright 2026 The bqclab Authors
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

#include "bqc/quantum/angle.hpp"

#include <numbers>

namespace bqc {

double Angle8::radians() const { return k_ * std::numbers::pi / 4.0; }

std::string Angle8::to_string() const {
  static constexpr const char* kNames[8] = {"0",     "pi/4",   "pi/2",   "3pi/4",
                                            "pi",    "5pi/4",  "3pi/2",  "7pi/4"};
  return kNames[k_];
}

}  // namespace bqc
