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

// Command-line front end. Every subcommand writes one JSON document to
// stdout (or a text summary with --format text) and a short summary to
// stderr. Exit codes: 0 ok, 1 domain error, 2 bad input, 3 cap exceeded.

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "peirce/automorphisms.h"
#include "peirce/io.h"
#include "peirce/oracle.h"
#include "peirce/report.h"

namespace {

using peirce::Element;
using peirce::Error;
using peirce::ErrorKind;
using peirce::Json;
using peirce::Ring;

struct Options {
  std::uint64_t cap = peirce::Limits{}.element_cap;
  bool all = false;
  bool oracle = false;
  std::string format = "json";
  std::vector<std::string> files;

  peirce::Limits limits() const {
    peirce::Limits l;
    l.element_cap = cap;
    return l;
  }
};

struct Output {
  Json json;
  std::string summary;
};

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCapExceeded:
      return 3;
    case ErrorKind::kShapeMismatch:
    case ErrorKind::kUnreduced:
    case ErrorKind::kFormat:
    case ErrorKind::kNonAssociative:
    case ErrorKind::kOrderViolation:
    case ErrorKind::kUnitFailure:
    case ErrorKind::kAmbientMismatch:
      return 2;
    default:
      return 1;
  }
}

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs an oracle cross-check. A mismatch aborts the command; an oracle that
// exceeds its own caps is recorded as skipped.
void CrossCheck(Json& out, const std::function<bool()>& agrees,
                const std::string& what) {
  try {
    if (!agrees()) throw OracleMismatch("oracle disagrees on " + what);
    out["oracle"] = "agree";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCapExceeded) throw;
    out["oracle"] = "skipped";
  }
}

Json ElementsJson(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const Element& x : xs) out.push_back(peirce::ElementToJson(x));
  return out;
}

std::string Join(const std::vector<Element>& xs) {
  std::string s;
  for (const Element& x : xs) s += (s.empty() ? "" : " ") + peirce::ToString(x);
  return s.empty() ? "none" : s;
}

Output Validate(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  Json j{{"valid", true},
         {"name", a.name()},
         {"size", a.size()},
         {"rank", a.rank()},
         {"hash", peirce::RingHash(a)}};
  return {j, a.name() + ": valid ring with " + std::to_string(a.size()) +
                 " elements"};
}

Output Idempotents(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  const auto idems = peirce::EnumerateIdempotents(a, o.limits());
  std::vector<Element> semicentral;
  for (const Element& e : idems) {
    if (peirce::IsSemicentral(a, e)) semicentral.push_back(e);
  }
  const bool reduced = semicentral.size() <= 2;
  Json j{{"count", idems.size()},
         {"idempotents", ElementsJson(idems)},
         {"semicentral", ElementsJson(semicentral)},
         {"semicentral_reduced", reduced}};
  if (o.oracle) {
    CrossCheck(j, [&] {
      return peirce::oracle::BruteIdempotents(a) == idems &&
             peirce::oracle::BruteSemicentralIdempotents(a) == semicentral;
    }, "idempotents");
  }
  return {j, std::to_string(idems.size()) + " idempotents; semicentral: " +
                 Join(semicentral)};
}

Output Triangulate(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  const auto seq = peirce::CompleteTriangulatingSet(a, o.limits());
  Json orders = Json::array();
  for (std::size_t i = 0; i < seq.length(); ++i) {
    orders.push_back(seq.corner(i).presentation.size());
  }
  Json j{{"m", seq.length()},
         {"sequence", ElementsJson(seq.idempotents())},
         {"corner_orders", orders}};
  if (o.oracle) {
    CrossCheck(j, [&] {
      return peirce::oracle::BruteTriangularCheck(a, seq.idempotents());
    }, "the triangulating sequence");
  }
  return {j, "m = " + std::to_string(seq.length()) + ": " +
                 Join(seq.idempotents())};
}

Output Orders(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  const auto seq = peirce::CompleteTriangulatingSet(a, o.limits());
  const auto orders = peirce::AdmissibleOrders(a, seq, o.limits());
  Json list = Json::array();
  for (const auto& p : orders) list.push_back(peirce::PermutationToJson(p));
  Json j{{"sequence", ElementsJson(seq.idempotents())}, {"admissible", list}};
  if (o.oracle) {
    CrossCheck(j, [&] {
      peirce::Permutation p(seq.length());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
      std::vector<peirce::Permutation> brute;
      do {
        std::vector<Element> idems;
        for (std::size_t i : p) idems.push_back(seq[i]);
        if (peirce::oracle::BruteTriangularCheck(a, idems)) brute.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return brute == orders;
    }, "admissible orders");
  }
  return {j, std::to_string(orders.size()) + " admissible order(s)"};
}

Output Split(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  const auto seq = peirce::CompleteTriangulatingSet(a, o.limits());
  const auto splits = peirce::DetectDirectSum(a, peirce::PeirceDecompose(a, seq));
  Json list = Json::array();
  for (std::size_t s : splits) list.push_back(s + 1);
  Json j{{"sequence", ElementsJson(seq.idempotents())}, {"splits", list}};
  return {j, splits.empty() ? "no direct-sum split"
                            : std::to_string(splits.size()) +
                                  " block(s) split off as direct summands"};
}

Json ImagesJson(const peirce::RingIsomorphism& f) {
  return ElementsJson(f.images());
}

Output Aut(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  Json j;
  std::uint64_t order = 0;
  if (o.all) {
    const auto group = peirce::AutGroup(a, o.limits());
    order = group.order;
    Json list = Json::array();
    for (const auto& f : group.elements) list.push_back(ImagesJson(f));
    j["automorphisms"] = list;
  } else {
    order = peirce::AutOrder(a, o.limits());
  }
  j["order"] = order;
  if (o.oracle) {
    CrossCheck(j, [&] { return peirce::oracle::BruteIsos(a, a).size() == order; },
               "the automorphism count");
  }
  return {j, "|Aut| = " + std::to_string(order)};
}

Output IsoSynth(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  const Ring b = peirce::LoadRing(o.files[1]);
  const auto seq_a = peirce::CompleteTriangulatingSet(a, o.limits());
  const auto seq_b = peirce::CompleteTriangulatingSet(b, o.limits());
  peirce::IsoDecomposition d = [&] {
    try {
      return peirce::DecompositionFromJson(peirce::ReadJsonFile(o.files[2]),
                                           seq_a, seq_b);
    } catch (const Error& e) {
      throw Error(e.kind(), o.files[2] + ": " + e.message(), e.where());
    }
  }();
  const auto phi = peirce::IsoSynthesize(seq_a, seq_b, d, o.limits());
  Json j = peirce::MapToJson(phi.map(), a.name(), b.name());
  if (o.oracle) {
    CrossCheck(j, [&] {
      return peirce::oracle::BruteIsRingIso(a, b, phi.images());
    }, "the synthesized map");
  }
  return {j, "synthesized an isomorphism " + a.name() + " -> " + b.name()};
}

Output IsoDecompose(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  const Ring b = peirce::LoadRing(o.files[1]);
  const auto seq_a = peirce::CompleteTriangulatingSet(a, o.limits());
  const auto seq_b = peirce::CompleteTriangulatingSet(b, o.limits());
  const peirce::AdditiveMap map = [&] {
    try {
      return peirce::MapFromJson(peirce::ReadJsonFile(o.files[2]), a.orders(),
                                 b.orders());
    } catch (const Error& e) {
      throw Error(e.kind(), o.files[2] + ": " + e.message(), e.where());
    }
  }();
  const auto phi = peirce::RingIsomorphism::Make(a, b, map);
  const auto d = peirce::IsoDecompose(phi, seq_a, seq_b);
  Json j = peirce::DecompositionToJson(d);
  if (o.oracle) {
    CrossCheck(j, [&] {
      return peirce::IsoSynthesize(seq_a, seq_b, d, o.limits()) == phi &&
             peirce::oracle::BruteIsRingIso(a, b, phi.images());
    }, "the decomposition round trip");
  }
  return {j, "decomposed with sigma of length " + std::to_string(d.sigma.size())};
}

Output IsoSearch(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  const Ring b = peirce::LoadRing(o.files[1]);
  Json j;
  std::vector<std::vector<Element>> found;
  if (o.all) {
    Json list = Json::array();
    for (const auto& f : peirce::AllIsomorphisms(a, b, o.limits())) {
      list.push_back(peirce::MapToJson(f.map(), a.name(), b.name()));
      found.push_back(f.images());
    }
    j["count"] = list.size();
    j["maps"] = list;
  } else {
    const auto f = peirce::IsoSearch(a, b, o.limits());
    j["found"] = f.has_value();
    j["map"] = f ? peirce::MapToJson(f->map(), a.name(), b.name()) : Json();
    if (f) found.push_back(f->images());
  }
  if (o.oracle) {
    CrossCheck(j, [&] {
      const auto brute = peirce::oracle::BruteIsos(a, b);
      if (o.all) return brute == found;
      if (found.empty()) return brute.empty();
      return std::binary_search(brute.begin(), brute.end(), found[0]);
    }, "the isomorphism search");
  }
  const std::string summary =
      o.all ? std::to_string(found.size()) + " isomorphism(s)"
            : (found.empty() ? "rings are not isomorphic" : "found an isomorphism");
  return {j, summary};
}

Output Report(const Options& o) {
  const Ring a = peirce::LoadRing(o.files[0]);
  const auto r = peirce::Analyze(a, o.limits());
  Json j = peirce::ReportToJson(r);
  if (o.oracle) {
    CrossCheck(j, [&] {
      return peirce::oracle::BruteIdempotents(a) == r.idempotents &&
             peirce::oracle::BruteSemicentralIdempotents(a) == r.semicentral &&
             peirce::oracle::BruteTriangularCheck(a, r.sequence) &&
             peirce::oracle::BruteIsos(a, a).size() == r.aut_order;
    }, "the report");
  }
  return {j, peirce::ReportToText(r)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular decompositions and isomorphisms of finite rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--cap", opts.cap, "Element enumeration cap")
      ->check(CLI::PositiveNumber);
  app.add_flag("--all", opts.all, "List all results instead of the first");
  app.add_flag("--oracle", opts.oracle, "Cross-check against brute force");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> args;
    Output (*run)(const Options&);
  };
  const std::vector<Command> commands = {
      {"validate", "Validate a ring presentation", {"ring"}, Validate},
      {"idempotents", "List idempotents and semicentral ones", {"ring"}, Idempotents},
      {"triangulate", "Complete set of triangulating idempotents", {"ring"}, Triangulate},
      {"orders", "Admissible orders of the canonical sequence", {"ring"}, Orders},
      {"split", "Blocks that split off as direct summands", {"ring"}, Split},
      {"aut", "Automorphism group order (--all lists it)", {"ring"}, Aut},
      {"iso-synth", "Assemble an isomorphism from decomposition data",
       {"domain", "codomain", "decomposition"}, IsoSynth},
      {"iso-decompose", "Decompose an isomorphism",
       {"domain", "codomain", "map"}, IsoDecompose},
      {"iso-search", "Search for isomorphisms", {"domain", "codomain"}, IsoSearch},
      {"report", "Full analysis report", {"ring"}, Report},
  };
  std::vector<std::vector<std::string>> args(commands.size());
  for (std::size_t c = 0; c < commands.size(); ++c) {
    CLI::App* sub = app.add_subcommand(commands[c].name, commands[c].help);
    args[c].resize(commands[c].args.size());
    for (std::size_t i = 0; i < args[c].size(); ++i) {
      sub->add_option(commands[c].args[i], args[c][i], "JSON file")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (std::size_t c = 0; c < commands.size(); ++c) {
    if (!app.got_subcommand(commands[c].name)) continue;
    opts.files = args[c];
    try {
      const Output out = commands[c].run(opts);
      if (opts.format == "json") {
        std::cout << out.json.dump() << '\n';
        std::cerr << out.summary << (out.summary.ends_with('\n') ? "" : "\n");
      } else {
        std::cout << out.summary << (out.summary.ends_with('\n') ? "" : "\n");
      }
      return 0;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return ExitCode(e.kind());
    } catch (const OracleMismatch& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}
