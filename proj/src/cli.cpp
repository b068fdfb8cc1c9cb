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
#include "decohist/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decohist/classicality.hpp"
#include "decohist/examples.hpp"
#include "decohist/histories.hpp"
#include "decohist/io.hpp"
#include "decohist/recurrence.hpp"

namespace decohist::cli {
namespace {

struct Options {
  std::string system;
  std::string state;
  bool all_classical = false;
  int k = 0;
  double tol = 0.0;
  double epsilon = 0.0;
  long long qmax = kDefaultQMax;
  std::size_t budget = kDefaultBranchBudget;
  std::string name;
  int K = 2;
  int dim = 4;
  std::uint64_t seed = 0;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& file, std::istream& in) {
  std::string text;
  if (file == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(file);
    if (!f) throw InputError("cannot open " + file);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError((file == "-" ? std::string("<stdin>") : file) +
                     ": invalid JSON: " + e.what());
  }
}

json base_report(const char* command, const json& inputs, json tolerances) {
  return json{{"command", command},
              {"tool_version", kToolVersion},
              {"input_digest", digest(inputs)},
              {"tolerances", std::move(tolerances)}};
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

int check_classicality(const Options& opt, std::istream& in, std::ostream& out) {
  const json input = read_json(opt.system, in);
  const SystemFile sys = parse_system(input);
  const PreservationReport pr = preserves_classicality(sys.unitary, sys.partition, opt.tol);
  json report = base_report("check-classicality", json{{"system", input}},
                            json{{"tol_unitary", kTolUnitary}, {"tol", opt.tol}});
  report["verdict"] = pr.preserved ? "preserved" : "not_preserved";
  report["preservation"] = pr;
  emit(out, report);
  return pr.preserved ? kOk : kNotPreserved;
}

DensityOperator select_state(const Options& opt, const SystemFile& sys, std::istream& in,
                             json& state_input) {
  static const std::regex ket_pattern("ket([0-9]+)");
  std::smatch match;
  const int dim = sys.partition.dim();
  if (opt.state.empty() || opt.state == "embedded") {
    if (!sys.state) throw InputError("no --state given and the system has no embedded state");
    state_input = "embedded";
    return DensityOperator(*sys.state);
  }
  if (std::regex_match(opt.state, match, ket_pattern)) {
    const int i = std::stoi(match[1].str());
    if (i >= dim) throw InputError("--state " + opt.state + " exceeds dimension");
    state_input = opt.state;
    return DensityOperator::pure(ComplexVector::Unit(dim, i));
  }
  json j = read_json(opt.state, in);
  const json& m = j.is_object() ? j.at("state") : j;
  state_input = j;
  return DensityOperator(matrix_from_json(m, dim, j.is_object() ? "/state" : ""));
}

int check_decoherence(const Options& opt, std::istream& in, std::ostream& out) {
  if (opt.k < 1) throw InputError("--k must be at least 1");
  if (opt.all_classical && !opt.state.empty()) {
    throw InputError("--state and --all-classical are mutually exclusive");
  }
  const json input = read_json(opt.system, in);
  const SystemFile sys = parse_system(input);

  json state_input = "all-classical";
  std::optional<DensityOperator> rho;
  if (!opt.all_classical) rho = select_state(opt, sys, in, state_input);

  json report = base_report(
      "check-decoherence", json{{"system", input}, {"state", state_input}, {"k", opt.k}},
      json{{"tol_unitary", kTolUnitary},
           {"tol", opt.tol},
           {"prune_tol", prune_tolerance(opt.tol, opt.k)},
           {"budget", opt.budget}});
  report["initial_state"] = opt.all_classical ? json("all-classical") : state_input;
  try {
    const DecoherenceReport dr =
        rho ? decoherence_check(sys.unitary, *rho, sys.partition, opt.k, opt.tol, opt.budget)
            : decoherence_check_all_classical(sys.unitary, sys.partition, opt.k, opt.tol,
                                              opt.budget);
    report["verdict"] = dr.decoherent ? "decoherent" : "not_decoherent";
    report["decoherence"] = dr;
    emit(out, report);
    return dr.decoherent ? kOk : kNotDecoherent;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kKTooLarge) throw;
    report["verdict"] = "budget_exceeded";
    report["error"] = e.what();
    emit(out, report);
    return kBudgetExceeded;
  }
}

void require_epsilon(double epsilon, long long qmax) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) throw InputError("--epsilon must lie in (0, 2)");
  if (qmax < 1) throw InputError("--qmax must be positive");
}

json not_found_json(const RecurrenceNotFound& e) {
  return json{{"q_max", e.q_max()}, {"best_q", e.best_q()}, {"best_norm", e.best_norm()}};
}

int find_recurrence_cmd(const Options& opt, std::istream& in, std::ostream& out) {
  require_epsilon(opt.epsilon, opt.qmax);
  const json input = read_json(opt.system, in);
  const SystemFile sys = parse_system(input);
  json report = base_report("find-recurrence",
                            json{{"system", input}, {"epsilon", opt.epsilon}, {"qmax", opt.qmax}},
                            json{{"tol_unitary", kTolUnitary}, {"epsilon", opt.epsilon}});
  try {
    report["recurrence"] = find_recurrence(sys.unitary, opt.epsilon, opt.qmax);
    report["verdict"] = "found";
    emit(out, report);
    return kOk;
  } catch (const RecurrenceNotFound& e) {
    report["verdict"] = "not_found";
    report["best_candidate"] = not_found_json(e);
    emit(out, report);
    return kRecurrenceNotFound;
  }
}

int certify_violation_cmd(const Options& opt, std::istream& in, std::ostream& out) {
  require_epsilon(opt.epsilon, opt.qmax);
  const json input = read_json(opt.system, in);
  const SystemFile sys = parse_system(input);
  json report = base_report(
      "certify-violation",
      json{{"system", input}, {"epsilon", opt.epsilon}, {"qmax", opt.qmax}},
      json{{"tol_unitary", kTolUnitary},
           {"tol_witness", kTolWitness},
           {"epsilon", opt.epsilon},
           {"slack", certificate_slack(opt.epsilon)}});
  try {
    report["certificate"] = certify_violation(sys.unitary, sys.partition, opt.epsilon, opt.qmax);
    report["verdict"] = "certified";
    emit(out, report);
    return kOk;
  } catch (const RecurrenceNotFound& e) {
    report["verdict"] = "not_found";
    report["best_candidate"] = not_found_json(e);
    emit(out, report);
    return kRecurrenceNotFound;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoWitness) {
      report["verdict"] = "no_witness";
    } else if (e.code() == ErrorCode::kPartitionNotFineGrained) {
      report["verdict"] = "partition_not_fine_grained";
    } else {
      throw;
    }
    report["error"] = e.what();
    emit(out, report);
    return e.code() == ErrorCode::kNoWitness ? kNoWitness : kNotFineGrained;
  }
}

int example_cmd(const Options& opt, std::ostream& out) {
  if (opt.name == "theorem2") {
    emit(out, system_to_json(theorem2_system()));
  } else if (opt.name == "shift-hadamard") {
    emit(out, system_to_json(shift_hadamard_system(opt.K)));
  } else if (opt.name == "random-unitary" || opt.name == "random-monomial") {
    const bool monomial = opt.name == "random-monomial";
    NamedSystem sys{opt.name,
                    monomial ? random_monomial_unitary(opt.dim, opt.seed)
                             : random_unitary(opt.dim, opt.seed),
                    fine_partition(opt.dim),
                    {{"seed", std::to_string(opt.seed)}}};
    emit(out, system_to_json(sys));
  } else {
    throw InputError("unknown example name '" + opt.name + "'");
  }
  return kOk;
}

int spectrum_cmd(const Options& opt, std::istream& in, std::ostream& out) {
  const json input = read_json(opt.system, in);
  const SystemFile sys = parse_system(input);
  const UnitarySpectrum phases_of_u = unitary_spectrum(sys.unitary);
  json eigenvalues = json::array();
  for (std::size_t j = 0; j < phases_of_u.phases.size(); ++j) {
    eigenvalues.push_back(complex_to_json(phases_of_u.eigenvalue(j)));
  }
  json report = base_report("spectrum", json{{"system", input}},
                            json{{"tol_unitary", kTolUnitary}});
  report["phases"] = phases_of_u.phases;
  report["eigenvalues"] = std::move(eigenvalues);
  emit(out, report);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Decoherent-histories checks on finite-dimensional systems", "decohist"};
  app.require_subcommand(1);

  auto* cc = app.add_subcommand("check-classicality",
                                "Does the unitary map classical states to classical states?");
  cc->add_option("--system", opt.system, "System JSON file, '-' for stdin")->required();
  cc->add_option("--tol", opt.tol, "Projector-permutation tolerance")->default_val(kTolWitness);

  auto* cd = app.add_subcommand("check-decoherence", "Medium-decoherence check at length k");
  cd->add_option("--system", opt.system, "System JSON file, '-' for stdin")->required();
  cd->add_option("--k", opt.k, "History length")->required();
  cd->add_option("--state", opt.state, "ketN, 'embedded', or a JSON state file");
  cd->add_flag("--all-classical", opt.all_classical, "Check every classical initial state");
  cd->add_option("--tol", opt.tol, "Off-diagonal threshold")->default_val(kTolDecoherence);
  cd->add_option("--budget", opt.budget, "Maximum surviving branches")
      ->default_val(kDefaultBranchBudget);

  auto* fr = app.add_subcommand("find-recurrence", "Smallest q with ||U^q - 1|| < epsilon");
  fr->add_option("--system", opt.system, "System JSON file, '-' for stdin")->required();
  fr->add_option("--epsilon", opt.epsilon, "Recurrence accuracy")->required();
  fr->add_option("--qmax", opt.qmax, "Largest q scanned")->default_val(kDefaultQMax);

  auto* cv = app.add_subcommand("certify-violation",
                                "Witness plus recurrence that exhibits non-decoherence");
  cv->add_option("--system", opt.system, "System JSON file, '-' for stdin")->required();
  cv->add_option("--epsilon", opt.epsilon, "Recurrence accuracy")->required();
  cv->add_option("--qmax", opt.qmax, "Largest q scanned")->default_val(kDefaultQMax);

  auto* ex = app.add_subcommand("example", "Emit a built-in system as JSON");
  ex->add_option("--name", opt.name, "theorem2 | shift-hadamard | random-unitary | random-monomial")
      ->required();
  ex->add_option("--K", opt.K, "Half-dimension of shift-hadamard")->default_val(2);
  ex->add_option("--dim", opt.dim, "Dimension of random systems")->default_val(4);
  ex->add_option("--seed", opt.seed, "Seed of random systems")->default_val(0);

  auto* sp = app.add_subcommand("spectrum", "Eigenphases of the system unitary");
  sp->add_option("--system", opt.system, "System JSON file, '-' for stdin")->required();

  std::vector<const char*> argv{"decohist"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cc->parsed()) return check_classicality(opt, in, out);
    if (cd->parsed()) return check_decoherence(opt, in, out);
    if (fr->parsed()) return find_recurrence_cmd(opt, in, out);
    if (cv->parsed()) return certify_violation_cmd(opt, in, out);
    if (ex->parsed()) return example_cmd(opt, out);
    if (sp->parsed()) return spectrum_cmd(opt, in, out);
  } catch (const InputError& e) {
    err << "decohist: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "decohist: " << e.what() << '\n';
    return e.code() == ErrorCode::kCertificateFailed ? 1 : kInputError;
  } catch (const json::exception& e) {
    err << "decohist: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace decohist::cli
