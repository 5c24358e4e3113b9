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

#include "peirce/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace peirce {

namespace {

[[noreturn]] void FormatError(const std::string& what) {
  throw Error(ErrorKind::kFormat, what);
}

Coeff IntFromJson(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) FormatError(what + " must be an integer");
  return j.get<Coeff>();
}

std::vector<Coeff> IntsFromJson(const Json& j, const std::string& what) {
  if (!j.is_array()) FormatError(what + " must be an array");
  std::vector<Coeff> out;
  for (const Json& x : j) out.push_back(IntFromJson(x, what + " entry"));
  return out;
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    FormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Element Sum(const Ring& r, const std::vector<Element>& xs) {
  Element s = r.zero();
  for (const Element& x : xs) s = r.Add(s, x);
  return s;
}

}  // namespace

Json ElementToJson(const Element& x) { return Json(x.coeffs); }

Element ElementFromJson(const Json& j, std::size_t length) {
  std::vector<Coeff> c = IntsFromJson(j, "element");
  if (c.size() != length) {
    FormatError("element has length " + std::to_string(c.size()) +
                ", expected " + std::to_string(length));
  }
  return Element{std::move(c)};
}

Json RingToJson(const Ring& a) {
  const RawPresentation raw = a.ToRaw();
  Json j;
  j["name"] = raw.name;
  j["orders"] = raw.orders;
  j["one"] = raw.one;
  j["mul"] = raw.mul;
  return j;
}

Ring RingFromJson(const Json& j) {
  if (!j.is_object()) FormatError("ring must be a JSON object");
  RawPresentation raw;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) FormatError("'name' must be a string");
    raw.name = j.at("name").get<std::string>();
  }
  raw.orders = IntsFromJson(Field(j, "orders"), "'orders'");
  raw.one = IntsFromJson(Field(j, "one"), "'one'");
  const Json& mul = Field(j, "mul");
  if (!mul.is_array()) FormatError("'mul' must be a 3-dimensional array");
  for (const Json& row : mul) {
    if (!row.is_array()) FormatError("'mul' must be a 3-dimensional array");
    std::vector<std::vector<Coeff>> r;
    for (const Json& cell : row) r.push_back(IntsFromJson(cell, "'mul' cell"));
    raw.mul.push_back(std::move(r));
  }
  return Ring::Validate(raw);
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    FormatError(path + ": " + e.what());
  }
}

Ring LoadRing(const std::string& path) {
  const Json j = ReadJsonFile(path);
  try {
    Ring a = RingFromJson(j);
    return a.name().empty() ? a.WithName(path) : a;
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message(), e.where());
  }
}

std::string RingHash(const Ring& a) {
  Json j = RingToJson(a);
  j.erase("name");
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json MapToJson(const AdditiveMap& f, const std::string& domain,
               const std::string& codomain) {
  Json images = Json::array();
  for (const Element& y : f.images) images.push_back(ElementToJson(y));
  return Json{{"domain", domain}, {"codomain", codomain}, {"images", images}};
}

AdditiveMap MapFromJson(const Json& j, const std::vector<Coeff>& domain_orders,
                        const std::vector<Coeff>& codomain_orders) {
  const Json& images = Field(j, "images");
  if (!images.is_array() || images.size() != domain_orders.size()) {
    FormatError("'images' must list one image per domain generator (" +
                std::to_string(domain_orders.size()) + ")");
  }
  AdditiveMap f{domain_orders, codomain_orders, {}};
  for (const Json& y : images) {
    f.images.push_back(ElementFromJson(y, codomain_orders.size()));
  }
  return f;
}

Json DecompositionToJson(const IsoDecomposition& d) {
  Json sigma = Json::array();
  for (std::size_t s : d.sigma) sigma.push_back(s + 1);
  Json layers = Json::array();
  for (const IsoLayer& layer : d.layers) {
    layers.push_back(Json{
        {"rho", MapToJson(layer.rho.map(), layer.rho.domain().name(),
                          layer.rho.codomain().name())},
        {"chi", MapToJson(layer.chi.map, "L", "M")},
        {"m", ElementToJson(layer.m)}});
  }
  return Json{{"sigma", sigma},
              {"layers", layers},
              {"last_rho", MapToJson(d.last_rho.map(), d.last_rho.domain().name(),
                                     d.last_rho.codomain().name())}};
}

IsoDecomposition DecompositionFromJson(const Json& j,
                                       const TriangularSequence& seq_a,
                                       const TriangularSequence& seq_b) {
  const Ring& a = seq_a.ring();
  const Ring& b = seq_b.ring();
  const std::size_t m = seq_a.length();
  const std::vector<Coeff> raw_sigma = IntsFromJson(Field(j, "sigma"), "'sigma'");
  Permutation sigma;
  for (Coeff s : raw_sigma) {
    if (s < 1 || static_cast<std::size_t>(s) > seq_b.length()) {
      FormatError("sigma entry " + std::to_string(s) + " out of range");
    }
    sigma.push_back(static_cast<std::size_t>(s - 1));
  }
  if (sigma.size() != m) {
    FormatError("sigma has length " + std::to_string(sigma.size()) +
                ", expected " + std::to_string(m));
  }
  const Json& layers = Field(j, "layers");
  if (!layers.is_array() || layers.size() != (m == 0 ? 0 : m - 1)) {
    FormatError("'layers' must have one entry per block but the last");
  }

  const Json& last = Field(j, "last_rho");
  if (m == 0) {
    return IsoDecomposition{
        {}, {}, RingIsomorphism::Make(a, b, MapFromJson(last, a.orders(), b.orders()))};
  }
  std::vector<Element> order_b;
  for (std::size_t s : sigma) order_b.push_back(seq_b[s]);

  std::vector<IsoLayer> out;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const Json& layer = layers[i];
    const Ring ra = MakeCornerRing(a, seq_a[i]).presentation;
    const Ring sb = MakeCornerRing(b, order_b[i]).presentation;
    RingIsomorphism rho = RingIsomorphism::Make(
        ra, sb, MapFromJson(Field(layer, "rho"), ra.orders(), sb.orders()));
    const Subgroup l = PeirceComponent(a, seq_a[i], seq_a.tail_unit(i + 1));
    const Subgroup mm = PeirceComponent(
        b, order_b[i],
        Sum(b, std::vector<Element>(order_b.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                    order_b.end())));
    BimoduleIsomorphism chi{
        l, mm,
        MapFromJson(Field(layer, "chi"), l.generator_orders(), mm.generator_orders())};
    out.push_back(IsoLayer{std::move(rho), std::move(chi),
                           ElementFromJson(Field(layer, "m"), b.rank())});
  }
  const Ring ra = MakeCornerRing(a, seq_a[m - 1]).presentation;
  const Ring sb = MakeCornerRing(b, order_b[m - 1]).presentation;
  RingIsomorphism last_rho =
      RingIsomorphism::Make(ra, sb, MapFromJson(last, ra.orders(), sb.orders()));
  return IsoDecomposition{std::move(sigma), std::move(out), std::move(last_rho)};
}

}  // namespace peirce
