//  Copyright 2026 The mulat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "mulat/cli/document.hpp"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mulat/error.hpp"

namespace mulat::cli {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidDocument, what);
}

json to_json(const LatticeDocument& d) {
  json j;
  j["version"] = d.version;
  j["kind"] = d.kind;
  if (d.kind == "explicit") {
    j["labels"] = d.labels;
    j["leq"] = d.leq;
    if (d.mult) j["mult"] = *d.mult;
  } else if (d.kind == "powerset" || d.kind == "chain") {
    j["k"] = d.k;
  } else if (d.kind == "zn") {
    j["n"] = d.n;
  } else if (d.kind == "pid-quotient") {
    j["primes"] = d.primes;
    j["exponents"] = d.exponents;
  } else if (d.kind == "topology") {
    j["points"] = d.points;
    j["opens"] = d.opens;
  } else if (d.kind == "preorder") {
    j["points"] = d.points;
    j["leq"] = d.leq;
  } else if (d.kind == "product") {
    json fs = json::array();
    for (const auto& f : d.factors) fs.push_back(to_json(f));
    j["factors"] = fs;
  }
  return j;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) invalid(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    invalid(std::string("field '") + key + "' has the wrong type");
  }
}

LatticeDocument from_json(const json& j) {
  if (!j.is_object()) invalid("document is not an object");
  LatticeDocument d;
  d.version = field<int>(j, "version");
  if (d.version != kDocumentVersion)
    invalid("unsupported version " + std::to_string(d.version));
  d.kind = field<std::string>(j, "kind");
  if (d.kind == "explicit") {
    d.labels = field<std::vector<std::string>>(j, "labels");
    d.leq = field<std::vector<std::pair<std::string, std::string>>>(j, "leq");
    if (j.contains("mult")) d.mult = field<std::vector<std::vector<std::string>>>(j, "mult");
  } else if (d.kind == "powerset" || d.kind == "chain") {
    d.k = field<std::int64_t>(j, "k");
  } else if (d.kind == "zn") {
    d.n = field<std::uint64_t>(j, "n");
  } else if (d.kind == "pid-quotient") {
    d.primes = field<std::vector<std::string>>(j, "primes");
    d.exponents = field<std::vector<int>>(j, "exponents");
  } else if (d.kind == "topology") {
    d.points = field<std::vector<std::string>>(j, "points");
    d.opens = field<std::vector<std::vector<std::string>>>(j, "opens");
  } else if (d.kind == "preorder") {
    d.points = field<std::vector<std::string>>(j, "points");
    d.leq = field<std::vector<std::pair<std::string, std::string>>>(j, "leq");
  } else if (d.kind == "product") {
    const auto& fs = j.contains("factors") ? j.at("factors") : json();
    if (!fs.is_array() || fs.size() != 2) invalid("product needs exactly two factors");
    for (const auto& f : fs) d.factors.push_back(from_json(f));
  } else {
    invalid("unknown kind '" + d.kind + "'");
  }
  return d;
}

std::map<std::string, Elem> index_names(const std::vector<std::string>& names,
                                        const char* what) {
  std::map<std::string, Elem> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], static_cast<Elem>(i)).second)
      invalid(std::string("duplicate ") + what + " '" + names[i] + "'");
  return out;
}

Elem lookup(const std::map<std::string, Elem>& names, const std::string& key) {
  const auto it = names.find(key);
  if (it == names.end()) invalid("unknown name '" + key + "'");
  return it->second;
}

Relation relation_from(const std::map<std::string, Elem>& names, std::size_t n,
                       const std::vector<std::pair<std::string, std::string>>& pairs) {
  Relation r = Relation::identity(n);
  for (const auto& [a, b] : pairs) r.set(lookup(names, a), lookup(names, b));
  return r;
}

}  // namespace

std::string save(const LatticeDocument& doc) { return to_json(doc).dump(2) + "\n"; }

LatticeDocument load(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("parse error: ") + e.what());
  }
  return from_json(j);
}

LatticeDocument load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

void save_file(const LatticeDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) invalid("cannot write '" + path + "'");
  out << save(doc);
}

LatticeDocument explicit_document(const FiniteLattice& lattice, const Quantale* quantale) {
  LatticeDocument d;
  d.kind = "explicit";
  d.labels = lattice.labels();
  for (const auto& [a, b] : lattice.order().strict_pairs())
    d.leq.emplace_back(lattice.label(a), lattice.label(b));
  if (quantale) {
    std::vector<std::vector<std::string>> table(lattice.size());
    for (Elem x = 0; x < lattice.size(); ++x)
      for (Elem y = 0; y < lattice.size(); ++y)
        table[x].push_back(lattice.label(quantale->mult(x, y)));
    d.mult = std::move(table);
  }
  return d;
}

LatticeDocument zn_document(std::uint64_t n) {
  LatticeDocument d;
  d.kind = "zn";
  d.n = n;
  return d;
}

LatticeDocument powerset_document(int k) {
  LatticeDocument d;
  d.kind = "powerset";
  d.k = k;
  return d;
}

LatticeDocument chain_document(int k) {
  LatticeDocument d;
  d.kind = "chain";
  d.k = k;
  return d;
}

LatticeDocument pid_document(std::string_view factorization) {
  LatticeDocument d;
  d.kind = "pid-quotient";
  std::istringstream in{std::string(factorization)};
  std::string token;
  while (in >> token) {
    int e = 1;
    const auto caret = token.rfind('^');
    if (caret != std::string::npos && token.find(')', caret) == std::string::npos) {
      try {
        std::size_t used = 0;
        e = std::stoi(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1) invalid("bad exponent in '" + token + "'");
      } catch (const std::logic_error&) {
        invalid("bad exponent in '" + token + "'");
      }
      token.resize(caret);
    }
    if (token.size() >= 2 && token.front() == '(' && token.back() == ')')
      token = token.substr(1, token.size() - 2);
    if (token.empty()) invalid("empty prime in factorization");
    d.primes.push_back(token);
    d.exponents.push_back(e);
  }
  if (d.primes.empty()) invalid("empty factorization");
  return d;
}

Instance instantiate(const LatticeDocument& d) {
  if (d.version != kDocumentVersion) invalid("unsupported version " + std::to_string(d.version));
  if (d.kind == "explicit") {
    const auto names = index_names(d.labels, "label");
    FiniteLattice l = build_lattice(d.labels, relation_from(names, d.labels.size(), d.leq));
    if (!d.mult) return make_instance("explicit", "explicit", std::move(l));
    const std::size_t n = l.size();
    if (d.mult->size() != n) invalid("mult table has the wrong number of rows");
    std::vector<Elem> table;
    for (const auto& row : *d.mult) {
      if (row.size() != n) invalid("mult table row has the wrong length");
      for (const auto& s : row) table.push_back(lookup(names, s));
    }
    return make_instance("explicit", "explicit", build_quantale(std::move(l), std::move(table)));
  }
  if (d.kind == "powerset")
    return make_instance("powerset" + std::to_string(d.k), "powerset",
                         powerset_frame(static_cast<int>(d.k)));
  if (d.kind == "chain")
    return make_instance("chain" + std::to_string(d.k), "chain", chain(static_cast<int>(d.k)));
  if (d.kind == "zn") return make_instance("Z" + std::to_string(d.n), zn_ideals(d.n));
  if (d.kind == "pid-quotient") {
    FactoredModulus mod{d.primes, d.exponents};
    const auto ideals = ideal_quantale(mod);
    return make_instance("ideals", ideals);
  }
  if (d.kind == "topology") {
    const auto names = index_names(d.points, "point");
    if (d.points.size() > 64) invalid("more than 64 points");
    TopologySpec spec{d.points, {}};
    for (const auto& open : d.opens) {
      PointSet s = 0;
      for (const auto& p : open) s |= PointSet{1} << lookup(names, p);
      spec.opens.push_back(s);
    }
    return make_instance("topology", "topology", topology_frame(spec), spec);
  }
  if (d.kind == "preorder") {
    const auto names = index_names(d.points, "point");
    auto frame = alexandrov_frame(relation_from(names, d.points.size(), d.leq), d.points);
    return make_instance("preorder", "alexandrov", std::move(frame.frame),
                         std::move(frame.topology));
  }
  if (d.kind == "product") {
    if (d.factors.size() != 2) invalid("product needs exactly two factors");
    return make_instance("product", "product",
                         product(instantiate(d.factors[0]).lattice,
                                 instantiate(d.factors[1]).lattice));
  }
  invalid("unknown kind '" + d.kind + "'");
}

}  // namespace mulat::cli
