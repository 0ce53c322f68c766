// Copyright 2026 The Entrodis Authors
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

#include <cstddef>

namespace entrodis {

/// Every validation threshold used by the library, in one record. All
/// constructors and checks take a `Tolerances` (defaulted to
/// `default_tolerances()`) so stress tests can tighten or loosen a single
/// knob without touching call sites.
struct Tolerances {
  double hermiticity = 1e-9;     // max entry of |M - M^dagger|
  double psd = 1e-9;             // eigenvalues >= -psd; [-psd, 0) clips to 0
  double trace_one = 1e-9;       // |Tr - 1|
  double unit_norm = 1e-9;       // | <psi|psi> - 1 |
  double completeness = 1e-9;    // max entry of |sum K^dagger K - I|
  double unitarity = 1e-10;      // max entry of |U^dagger U - I|
  double reconstruction = 1e-8;  // spectral resynthesis residual
  double probability = 1e-12;    // probabilities >= -probability clip to 0
  double distribution_sum = 1e-9;
  double xi_bisection = 1e-8;    // width at which the xi search stops
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace entrodis
