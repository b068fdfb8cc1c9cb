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

#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "decohist/classicality.hpp"
#include "decohist/examples.hpp"
#include "decohist/histories.hpp"
#include "decohist/linalg.hpp"
#include "decohist/partitions.hpp"
#include "decohist/recurrence.hpp"

namespace decohist {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// Malformed input; path is a JSON pointer to the offending value.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : Error(ErrorCode::kInvalidArgument, (path.empty() ? "/" : path) + ": " + message),
        path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Complex numbers travel as [re, im]; matrices as row-major nested arrays.
json complex_to_json(Complex z);
json matrix_to_json(const ComplexMatrix& m);
json vector_to_json(const ComplexVector& v);
Complex complex_from_json(const json& j, const std::string& path);
ComplexMatrix matrix_from_json(const json& j, int dim, const std::string& path);
ComplexVector vector_from_json(const json& j, int dim, const std::string& path);

// A system file: unitary, partition (blocks or projectors), optional state.
struct SystemFile {
  std::string name;
  ComplexMatrix unitary;
  ProjectivePartition partition;
  std::optional<ComplexMatrix> state;
  std::map<std::string, std::string> notes;
};

// Validates shape, unitarity and the partition; throws SchemaError.
SystemFile parse_system(const json& j);
json system_to_json(const SystemFile& sys);
json system_to_json(const NamedSystem& sys);
json partition_to_json(const ProjectivePartition& p);

// "fnv1a64:<16 hex digits>" of the canonical serialization.
std::string digest(const json& j);

void to_json(json& j, const History& h);
void from_json(const json& j, History& h);
void to_json(json& j, const NonClassicalityWitness& w);
void from_json(const json& j, NonClassicalityWitness& w);
void to_json(json& j, const PreservationReport& r);
void from_json(const json& j, PreservationReport& r);
void to_json(json& j, const DecoherenceReport& r);
void from_json(const json& j, DecoherenceReport& r);
void to_json(json& j, const RecurrenceResult& r);
void from_json(const json& j, RecurrenceResult& r);
void to_json(json& j, const ViolationCertificate& c);
void from_json(const json& j, ViolationCertificate& c);

}  // namespace decohist
