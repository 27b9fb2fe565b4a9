/*
   Copyright 2026 The polydaehee Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYDAEHEE_ENGINE_OPTIONS_HPP
#define POLYDAEHEE_ENGINE_OPTIONS_HPP

namespace polydaehee {

/// Deliberate engine defects used as negative controls for the verifier
/// suite. Production callers leave this at `none`.
enum class Fault {
    none,
    log1p_sign_flip,              // x^2 coefficient of log(1+x) gets the wrong sign
    dropped_guard_order,          // atoms skip their extra internal orders and zero-pad
    falling_factorial_off_by_one, // (s)_n computed with n + 1 factors
};

struct EngineOptions {
    Fault fault = Fault::none;
};

} // namespace polydaehee

#endif
