// Copyright 2026 The Loopforge Authors
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

#include <string>
#include <string_view>
#include <vector>

#include "loopforge/table.hpp"

namespace loopforge {

enum class CheckStatus { pass, fail, not_applicable };

std::string_view to_string(CheckStatus s);

struct AuditCheck {
  std::string name;
  /// Hypothesis under which the statement is claimed: "any", "cc", "pacc".
  std::string scope;
  CheckStatus status = CheckStatus::pass;
  /// Counterexample on failure, empty otherwise.
  std::string detail;
};

struct AuditReport {
  std::string loop_name;
  int order = 0;
  bool cc = false;
  bool pacc = false;
  bool associative = false;
  bool wip = false;
  /// Informational: whether the Moufang elements form a subloop.
  bool moufang_set_is_subloop = false;
  std::vector<AuditCheck> checks;

  int count(CheckStatus s) const;
  int failures() const { return count(CheckStatus::fail); }
};

/// Detects which hypotheses hold for q and evaluates every identity and
/// structural statement whose hypotheses are met. Checks whose hypotheses
/// fail are reported as not applicable.
AuditReport audit(const LoopTable& q);

}  // namespace loopforge
