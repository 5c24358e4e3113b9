// Copyright 2026 The Peirce Authors
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

#ifndef PEIRCE_REPORT_H_
#define PEIRCE_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "peirce/io.h"
#include "peirce/triangular.h"

namespace peirce {

struct AnalysisReport {
  std::string name;
  std::string hash;
  std::uint64_t size = 0;
  std::vector<Element> idempotents;
  std::vector<Element> semicentral;
  std::vector<Element> sequence;
  std::vector<std::uint64_t> corner_orders;
  std::vector<Permutation> admissible;
  std::vector<std::size_t> splits;
  std::uint64_t aut_order = 0;
  std::map<std::string, double> timings_ms;  // not part of the report proper
};

AnalysisReport Analyze(const Ring& a, const Limits& limits = {});

// {"report": {...}, "timings": {...}}; everything under "report" depends
// only on the input ring.
Json ReportToJson(const AnalysisReport& r);
std::string ReportToText(const AnalysisReport& r);

Json PermutationToJson(const Permutation& p);  // 1-based

}  // namespace peirce

#endif  // PEIRCE_REPORT_H_
