// Copyright 2026 The decohist Authors
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
#include "decohist/io.hpp"

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace decohist {
namespace {

std::string at(const std::string& path, std::size_t i) {
  return path + "/" + std::to_string(i);
}

std::string at(const std::string& path, const char* key) { return path + "/" + key; }

const json& require_key(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing");
  return *it;
}

double number_from_json(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  return j.get<double>();
}

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

json optional_to_json(const std::optional<std::vector<std::size_t>>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Complex complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected [re, im] pair");
  return {number_from_json(j[0], path + "/0"), number_from_json(j[1], path + "/1")};
}

ComplexVector vector_from_json(const json& j, int dim, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw SchemaError(path, "expected an array of " + std::to_string(dim) + " complex entries");
  }
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = complex_from_json(j[static_cast<std::size_t>(i)], at(path, static_cast<std::size_t>(i)));
  return v;
}

ComplexMatrix matrix_from_json(const json& j, int dim, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw SchemaError(path, "expected " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const auto row_path = at(path, static_cast<std::size_t>(r));
    m.row(r) = vector_from_json(j[static_cast<std::size_t>(r)], dim, row_path).transpose();
  }
  return m;
}

SystemFile parse_system(const json& j) {
  if (!j.is_object()) throw SchemaError("", "expected a system object");
  const int dim = int_from_json(require_key(j, "dim", ""), "/dim");
  if (dim < 1 || dim > kMaxDim) {
    throw SchemaError("/dim", "dimension must lie in [1, " + std::to_string(kMaxDim) + "]");
  }
  ComplexMatrix u = matrix_from_json(require_key(j, "unitary", ""), dim, "/unitary");
  if (!validate_unitary(u, kTolUnitary)) {
    throw SchemaError("/unitary", "matrix is not unitary within tolerance");
  }

  const json& part = require_key(j, "partition", "");
  if (!part.is_object()) throw SchemaError("/partition", "expected an object");
  std::optional<ProjectivePartition> partition;
  try {
    if (part.contains("blocks")) {
      const json& blocks_json = part["blocks"];
      if (!blocks_json.is_array()) throw SchemaError("/partition/blocks", "expected an array");
      std::vector<std::vector<int>> blocks;
      for (std::size_t mu = 0; mu < blocks_json.size(); ++mu) {
        const auto path = at("/partition/blocks", mu);
        if (!blocks_json[mu].is_array()) throw SchemaError(path, "expected an index list");
        std::vector<int> block;
        for (std::size_t i = 0; i < blocks_json[mu].size(); ++i) {
          block.push_back(int_from_json(blocks_json[mu][i], at(path, i)));
        }
        blocks.push_back(std::move(block));
      }
      partition = ProjectivePartition::from_blocks(dim, std::move(blocks));
    } else if (part.contains("projectors")) {
      const json& pj = part["projectors"];
      if (!pj.is_array()) throw SchemaError("/partition/projectors", "expected an array");
      std::vector<ComplexMatrix> projectors;
      for (std::size_t mu = 0; mu < pj.size(); ++mu) {
        projectors.push_back(matrix_from_json(pj[mu], dim, at("/partition/projectors", mu)));
      }
      partition = ProjectivePartition::from_projectors(std::move(projectors));
    } else {
      throw SchemaError("/partition", "expected \"blocks\" or \"projectors\"");
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError("/partition", e.what());
  }

  SystemFile sys{"", std::move(u), std::move(*partition), std::nullopt, {}};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("/name", "expected a string");
    sys.name = j["name"].get<std::string>();
  }
  if (j.contains("state") && !j["state"].is_null()) {
    sys.state = matrix_from_json(j["state"], dim, "/state");
  }
  if (j.contains("notes")) {
    if (!j["notes"].is_object()) throw SchemaError("/notes", "expected an object");
    for (const auto& [key, value] : j["notes"].items()) {
      if (!value.is_string()) throw SchemaError(at("/notes", key.c_str()), "expected a string");
      sys.notes[key] = value.get<std::string>();
    }
  }
  return sys;
}

json partition_to_json(const ProjectivePartition& p) {
  if (p.basis_aligned()) return json{{"blocks", *p.blocks()}};
  json projectors = json::array();
  for (const auto& proj : p.projectors()) projectors.push_back(matrix_to_json(proj));
  return json{{"projectors", std::move(projectors)}};
}

json system_to_json(const SystemFile& sys) {
  json j;
  if (!sys.name.empty()) j["name"] = sys.name;
  j["dim"] = sys.unitary.rows();
  j["unitary"] = matrix_to_json(sys.unitary);
  j["partition"] = partition_to_json(sys.partition);
  if (sys.state) j["state"] = matrix_to_json(*sys.state);
  if (!sys.notes.empty()) j["notes"] = sys.notes;
  return j;
}

json system_to_json(const NamedSystem& sys) {
  return system_to_json(SystemFile{sys.name, sys.unitary, sys.partition, std::nullopt, sys.notes});
}

std::string digest(const json& j) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

void to_json(json& j, const History& h) { j = h.indices(); }

void from_json(const json& j, History& h) {
  h = History(j.get<std::vector<std::size_t>>());
}

void to_json(json& j, const NonClassicalityWitness& w) {
  j = json{{"mu0", w.mu0},
           {"source_vector", vector_to_json(w.source_vector)},
           {"mu_prime", w.mu_prime},
           {"mu_dprime", w.mu_dprime},
           {"c_prime", complex_to_json(w.c_prime)},
           {"c_dprime", complex_to_json(w.c_dprime)}};
}

void from_json(const json& j, NonClassicalityWitness& w) {
  w.mu0 = j.at("mu0").get<std::size_t>();
  const auto& sv = j.at("source_vector");
  w.source_vector = vector_from_json(sv, static_cast<int>(sv.size()), "/source_vector");
  w.mu_prime = j.at("mu_prime").get<std::size_t>();
  w.mu_dprime = j.at("mu_dprime").get<std::size_t>();
  w.c_prime = complex_from_json(j.at("c_prime"), "/c_prime");
  w.c_dprime = complex_from_json(j.at("c_dprime"), "/c_dprime");
}

void to_json(json& j, const PreservationReport& r) {
  j = json{{"preserved", r.preserved},
           {"block_map", optional_to_json(r.block_map)},
           {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}

void from_json(const json& j, PreservationReport& r) {
  r.preserved = j.at("preserved").get<bool>();
  r.block_map.reset();
  r.witness.reset();
  if (!j.at("block_map").is_null()) r.block_map = j["block_map"].get<std::vector<std::size_t>>();
  if (!j.at("witness").is_null()) r.witness = j["witness"].get<NonClassicalityWitness>();
}

void to_json(json& j, const DecoherenceReport& r) {
  json diagonal = json::array();
  for (const auto& [h, prob] : r.diagonal) {
    diagonal.push_back(json{{"history", h}, {"probability", prob}});
  }
  j = json{{"decoherent", r.decoherent},
           {"k", r.k},
           {"tol", r.tol},
           {"max_offdiag", r.max_offdiag},
           {"worst_pair", r.worst_pair ? json::array({r.worst_pair->first, r.worst_pair->second})
                                       : json(nullptr)},
           {"diagonal", std::move(diagonal)},
           {"num_branches", r.num_branches}};
}

void from_json(const json& j, DecoherenceReport& r) {
  r.decoherent = j.at("decoherent").get<bool>();
  r.k = j.at("k").get<int>();
  r.tol = j.at("tol").get<double>();
  r.max_offdiag = j.at("max_offdiag").get<double>();
  r.worst_pair.reset();
  if (!j.at("worst_pair").is_null()) {
    r.worst_pair = HistoryPair(j["worst_pair"].at(0).get<History>(),
                               j["worst_pair"].at(1).get<History>());
  }
  r.diagonal.clear();
  for (const auto& entry : j.at("diagonal")) {
    r.diagonal.emplace(entry.at("history").get<History>(), entry.at("probability").get<double>());
  }
  r.num_branches = j.at("num_branches").get<std::size_t>();
}

void to_json(json& j, const RecurrenceResult& r) {
  j = json{{"q", r.q},
           {"norm", r.norm},
           {"epsilon", r.epsilon},
           {"phase_residuals", r.phase_residuals}};
}

void from_json(const json& j, RecurrenceResult& r) {
  r.q = j.at("q").get<long long>();
  r.norm = j.at("norm").get<double>();
  r.epsilon = j.at("epsilon").get<double>();
  r.phase_residuals = j.at("phase_residuals").get<std::vector<double>>();
}

void to_json(json& j, const ViolationCertificate& c) {
  j = json{{"witness", c.witness},
           {"q", c.q},
           {"epsilon", c.epsilon},
           {"recurrence_norm", c.recurrence_norm},
           {"endpoint_value", complex_to_json(c.endpoint_value)},
           {"offdiag_magnitude", c.offdiag_magnitude},
           {"predicted_floor", c.predicted_floor},
           {"slack", c.slack},
           {"k_used", c.k_used ? json(*c.k_used) : json(nullptr)},
           {"k_used_endpoint", c.k_used_endpoint},
           {"k_used_magnitude", c.k_used_magnitude}};
}

void from_json(const json& j, ViolationCertificate& c) {
  c.witness = j.at("witness").get<NonClassicalityWitness>();
  c.q = j.at("q").get<long long>();
  c.epsilon = j.at("epsilon").get<double>();
  c.recurrence_norm = j.at("recurrence_norm").get<double>();
  c.endpoint_value = complex_from_json(j.at("endpoint_value"), "/endpoint_value");
  c.offdiag_magnitude = j.at("offdiag_magnitude").get<double>();
  c.predicted_floor = j.at("predicted_floor").get<double>();
  c.slack = j.at("slack").get<double>();
  c.k_used.reset();
  if (!j.at("k_used").is_null()) c.k_used = j["k_used"].get<long long>();
  c.k_used_endpoint = j.at("k_used_endpoint").get<std::size_t>();
  c.k_used_magnitude = j.at("k_used_magnitude").get<double>();
}

}  // namespace decohist
