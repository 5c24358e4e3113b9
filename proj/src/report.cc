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

#include "peirce/report.h"

#include <chrono>
#include <sstream>

#include "peirce/automorphisms.h"

namespace peirce {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(double& sink)
      : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    sink_ = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start_)
                .count();
  }

 private:
  double& sink_;
  std::chrono::steady_clock::time_point start_;
};

Json Elements(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const Element& x : xs) out.push_back(ElementToJson(x));
  return out;
}

}  // namespace

Json PermutationToJson(const Permutation& p) {
  Json out = Json::array();
  for (std::size_t i : p) out.push_back(i + 1);
  return out;
}

AnalysisReport Analyze(const Ring& a, const Limits& limits) {
  AnalysisReport r;
  r.name = a.name();
  r.hash = RingHash(a);
  r.size = a.size();
  {
    Stopwatch t(r.timings_ms["idempotents"]);
    r.idempotents = EnumerateIdempotents(a, limits);
    for (const Element& e : r.idempotents) {
      if (IsSemicentral(a, e)) r.semicentral.push_back(e);
    }
  }
  std::optional<TriangularSequence> seq;
  {
    Stopwatch t(r.timings_ms["triangulate"]);
    seq = CompleteTriangulatingSet(a, limits);
    r.sequence = seq->idempotents();
    for (std::size_t i = 0; i < seq->length(); ++i) {
      r.corner_orders.push_back(seq->corner(i).presentation.size());
    }
  }
  {
    Stopwatch t(r.timings_ms["orders"]);
    r.admissible = AdmissibleOrders(a, *seq, limits);
    r.splits = DetectDirectSum(a, PeirceDecompose(a, *seq));
  }
  {
    Stopwatch t(r.timings_ms["aut"]);
    r.aut_order = AutOrder(a, limits);
  }
  return r;
}

Json ReportToJson(const AnalysisReport& r) {
  Json admissible = Json::array();
  for (const Permutation& p : r.admissible) admissible.push_back(PermutationToJson(p));
  Json splits = Json::array();
  for (std::size_t j : r.splits) splits.push_back(j + 1);
  Json report{{"name", r.name},
              {"hash", r.hash},
              {"size", r.size},
              {"idempotent_count", r.idempotents.size()},
              {"semicentral", Elements(r.semicentral)},
              {"m", r.sequence.size()},
              {"sequence", Elements(r.sequence)},
              {"corner_orders", r.corner_orders},
              {"admissible_orders", admissible},
              {"splits", splits},
              {"aut_order", r.aut_order}};
  return Json{{"report", report}, {"timings", r.timings_ms}};
}

std::string ReportToText(const AnalysisReport& r) {
  std::ostringstream out;
  out << "ring " << r.name << " (" << r.size << " elements, hash " << r.hash
      << ")\n";
  out << "  idempotents: " << r.idempotents.size() << ", semicentral:";
  for (const Element& e : r.semicentral) out << ' ' << ToString(e);
  out << "\n  triangulating sequence (m = " << r.sequence.size() << "):";
  for (const Element& e : r.sequence) out << ' ' << ToString(e);
  out << "\n  admissible orders: " << r.admissible.size()
      << "\n  direct-sum splits:";
  for (std::size_t j : r.splits) out << ' ' << j + 1;
  if (r.splits.empty()) out << " none";
  out << "\n  automorphisms: " << r.aut_order << '\n';
  return out.str();
}

}  // namespace peirce
