// Copyright 2026 The greedy-rates Authors. All Rights Reserved.
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

#include "greedy/error.hpp"

namespace greedy {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "invalid argument";
    case Errc::kDimensionMismatch: return "dimension mismatch";
    case Errc::kNotHilbert: return "not a Hilbert space";
    case Errc::kZeroElement: return "zero element";
    case Errc::kNotUnit: return "non-unit input";
    case Errc::kWrongDictionaryKind: return "wrong dictionary kind";
    case Errc::kEmptyDictionary: return "empty dictionary";
    case Errc::kBudgetExceeded: return "budget exceeded";
    case Errc::kAboveThreshold: return "alpha above threshold";
    case Errc::kUnsorted: return "unsorted coefficients";
    case Errc::kResolution: return "insufficient resolution";
    case Errc::kMissingData: return "missing data";
    case Errc::kIo: return "i/o error";
  }
  return "unknown";
}

}  // namespace greedy
