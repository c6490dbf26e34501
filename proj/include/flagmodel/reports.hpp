#pragma once

// Machine-readable command reports and their JSON form. Every document
// carries "schema_version": 1 at top level.

#include <string>
#include <vector>

#include "json.hpp"

#include "flagmodel/bounds.hpp"
#include "flagmodel/repdim.hpp"

namespace flagmodel {

inline constexpr int kSchemaVersion = 1;

using Rows = std::vector<std::vector<double>>;

Rows to_rows(const Matrix& m);
Matrix from_rows(const Rows& rows);

struct EmbedReport {
  int n = 0;
  std::vector<int> ks;
  std::vector<double> spectrum;
  Rows matrix;
  std::vector<double> eigenvalues;
  double trace = 0.0;

  bool operator==(const EmbedReport&) const = default;
};

struct RecoverReport {
  int n = 0;
  std::vector<int> ks;
  std::vector<double> spectrum;
  Rows q;
  /// Orthonormal eigenbasis for each spectrum value, as n x n_i blocks.
  std::vector<Rows> eigenbases;
  double reconstruction_error = 0.0;

  bool operator==(const RecoverReport&) const = default;
};

struct ProjectReport {
  int n = 0;
  std::vector<int> ks;
  std::vector<double> spectrum;
  Rows point;
  double distance = 0.0;

  bool operator==(const ProjectReport&) const = default;
};

struct OptimizeReport {
  int n = 0;
  std::vector<int> ks;
  std::vector<double> spectrum;
  double step = 0.0;
  Rows point;
  int iterations = 0;
  bool converged = false;
  double final_grad_norm = 0.0;
  std::vector<double> grad_norms;
  /// Frobenius distance to the target matrix and to its nearest point.
  double distance_to_target = 0.0;
  double distance_to_nearest = 0.0;

  bool operator==(const OptimizeReport&) const = default;
};

struct DimReport {
  int n = 0;
  std::string weight;
  BigInt dimension;

  bool operator==(const DimReport&) const = default;
};

struct SweepReport {
  int max_n = 0;
  std::vector<BoundReport> rows;
  bool all_gunther_hold = false;

  bool operator==(const SweepReport&) const = default;
};

void to_json(nlohmann::json& j, const EmbedReport& r);
void from_json(const nlohmann::json& j, EmbedReport& r);
void to_json(nlohmann::json& j, const RecoverReport& r);
void from_json(const nlohmann::json& j, RecoverReport& r);
void to_json(nlohmann::json& j, const ProjectReport& r);
void from_json(const nlohmann::json& j, ProjectReport& r);
void to_json(nlohmann::json& j, const OptimizeReport& r);
void from_json(const nlohmann::json& j, OptimizeReport& r);
void to_json(nlohmann::json& j, const DimReport& r);
void from_json(const nlohmann::json& j, DimReport& r);
void to_json(nlohmann::json& j, const EnumerationReport& r);
void from_json(const nlohmann::json& j, EnumerationReport& r);
void to_json(nlohmann::json& j, const ClassificationReport& r);
void from_json(const nlohmann::json& j, ClassificationReport& r);
void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);
void to_json(nlohmann::json& j, const SweepReport& r);
void from_json(const nlohmann::json& j, SweepReport& r);

}  // namespace flagmodel
