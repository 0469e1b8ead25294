/* Copyright (C) 2026 The xhc Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef XHC_REPORT_HPP
#define XHC_REPORT_HPP

#include <string>
#include <vector>

namespace xhc {

/// One named verification outcome; `witness` explains the first failure.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
  bool info = false;  // informational, never fails a report
};

struct CheckReport {
  std::vector<Check> items;

  void add(std::string name, bool passed, std::string witness = {}) {
    items.push_back({std::move(name), passed, std::move(witness)});
  }
  void note(std::string name, bool passed, std::string witness = {}) {
    items.push_back({std::move(name), passed, std::move(witness), true});
  }
  void merge(const CheckReport& o, const std::string& prefix = {}) {
    for (const auto& c : o.items) items.push_back({prefix + c.name, c.passed, c.witness, c.info});
  }
  bool ok() const {
    for (const auto& c : items)
      if (!c.passed && !c.info) return false;
    return true;
  }
  /// First failing item, or nullptr.
  const Check* first_failure() const {
    for (const auto& c : items)
      if (!c.passed && !c.info) return &c;
    return nullptr;
  }
  std::string str() const {
    std::string s;
    for (const auto& c : items) {
      s += std::string(c.passed ? "PASS " : (c.info ? "NOTE " : "FAIL ")) + c.name;
      if (!c.passed && !c.witness.empty()) s += " : " + c.witness;
      s += "\n";
    }
    return s;
  }
};

}  // namespace xhc

#endif
