#include "flagmodel/reports.hpp"

namespace flagmodel {

using nlohmann::json;

Rows to_rows(const Matrix& m) {
  Rows rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
  return rows;
}

Matrix from_rows(const Rows& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw FlagError(ErrorCode::ParseError, "ragged matrix rows");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

namespace {

void check_schema(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw FlagError(ErrorCode::ParseError, "unsupported schema_version");
}

BigInt big_from(const json& j) { return BigInt(j.get<std::string>()); }

json hit_json(const EnumerationHit& h) {
  return {{"weight", h.weight.to_string()},
          {"doubled", h.weight.doubled()},
          {"dimension", h.dimension.str()},
          {"conjugate_pair", h.conjugate_pair},
          {"real_form", h.real_form}};
}

EnumerationHit hit_from(const json& j, int n) {
  return EnumerationHit{
      HighestWeight::from_doubled(n, j.at("doubled").get<std::vector<int>>()),
      big_from(j.at("dimension")), j.at("conjugate_pair").get<bool>(),
      j.at("real_form").get<bool>()};
}

std::vector<EnumerationHit> hits_from(const json& j, int n) {
  std::vector<EnumerationHit> hits;
  for (const auto& h : j) hits.push_back(hit_from(h, n));
  return hits;
}

json hits_json(const std::vector<EnumerationHit>& hits) {
  json arr = json::array();
  for (const auto& h : hits) arr.push_back(hit_json(h));
  return arr;
}

}  // namespace

void to_json(json& j, const EmbedReport& r) {
  j = {{"schema_version", kSchemaVersion}, {"command", "embed"},
       {"n", r.n}, {"ks", r.ks}, {"spectrum", r.spectrum}, {"matrix", r.matrix},
       {"eigenvalues", r.eigenvalues}, {"trace", r.trace}};
}

void from_json(const json& j, EmbedReport& r) {
  check_schema(j);
  j.at("n").get_to(r.n);
  j.at("ks").get_to(r.ks);
  j.at("spectrum").get_to(r.spectrum);
  j.at("matrix").get_to(r.matrix);
  j.at("eigenvalues").get_to(r.eigenvalues);
  j.at("trace").get_to(r.trace);
}

void to_json(json& j, const RecoverReport& r) {
  j = {{"schema_version", kSchemaVersion}, {"command", "recover"},
       {"n", r.n}, {"ks", r.ks}, {"spectrum", r.spectrum}, {"q", r.q},
       {"eigenbases", r.eigenbases}, {"reconstruction_error", r.reconstruction_error}};
}

void from_json(const json& j, RecoverReport& r) {
  check_schema(j);
  j.at("n").get_to(r.n);
  j.at("ks").get_to(r.ks);
  j.at("spectrum").get_to(r.spectrum);
  j.at("q").get_to(r.q);
  j.at("eigenbases").get_to(r.eigenbases);
  j.at("reconstruction_error").get_to(r.reconstruction_error);
}

void to_json(json& j, const ProjectReport& r) {
  j = {{"schema_version", kSchemaVersion}, {"command", "project"},
       {"n", r.n}, {"ks", r.ks}, {"spectrum", r.spectrum}, {"point", r.point},
       {"distance", r.distance}};
}

void from_json(const json& j, ProjectReport& r) {
  check_schema(j);
  j.at("n").get_to(r.n);
  j.at("ks").get_to(r.ks);
  j.at("spectrum").get_to(r.spectrum);
  j.at("point").get_to(r.point);
  j.at("distance").get_to(r.distance);
}

void to_json(json& j, const OptimizeReport& r) {
  j = {{"schema_version", kSchemaVersion}, {"command", "optimize"},
       {"n", r.n}, {"ks", r.ks}, {"spectrum", r.spectrum}, {"step", r.step},
       {"point", r.point}, {"iterations", r.iterations}, {"converged", r.converged},
       {"final_grad_norm", r.final_grad_norm}, {"grad_norms", r.grad_norms},
       {"distance_to_target", r.distance_to_target},
       {"distance_to_nearest", r.distance_to_nearest}};
}

void from_json(const json& j, OptimizeReport& r) {
  check_schema(j);
  j.at("n").get_to(r.n);
  j.at("ks").get_to(r.ks);
  j.at("spectrum").get_to(r.spectrum);
  j.at("step").get_to(r.step);
  j.at("point").get_to(r.point);
  j.at("iterations").get_to(r.iterations);
  j.at("converged").get_to(r.converged);
  j.at("final_grad_norm").get_to(r.final_grad_norm);
  j.at("grad_norms").get_to(r.grad_norms);
  j.at("distance_to_target").get_to(r.distance_to_target);
  j.at("distance_to_nearest").get_to(r.distance_to_nearest);
}

void to_json(json& j, const DimReport& r) {
  j = {{"schema_version", kSchemaVersion}, {"command", "repdim dim"},
       {"n", r.n}, {"weight", r.weight}, {"dimension", r.dimension.str()}};
}

void from_json(const json& j, DimReport& r) {
  check_schema(j);
  j.at("n").get_to(r.n);
  j.at("weight").get_to(r.weight);
  r.dimension = big_from(j.at("dimension"));
}

void to_json(json& j, const EnumerationReport& r) {
  j = {{"schema_version", kSchemaVersion}, {"command", "repdim enumerate"},
       {"n", r.n}, {"max_dim", r.max_dim.str()},
       {"search_box", {{"mu1_cap_doubled", r.mu1_cap_doubled},
                       {"weights_examined", r.weights_examined}}},
       {"hits", hits_json(r.hits)}};
}

void from_json(const json& j, EnumerationReport& r) {
  check_schema(j);
  j.at("n").get_to(r.n);
  r.max_dim = big_from(j.at("max_dim"));
  j.at("search_box").at("mu1_cap_doubled").get_to(r.mu1_cap_doubled);
  j.at("search_box").at("weights_examined").get_to(r.weights_examined);
  r.hits = hits_from(j.at("hits"), r.n);
}

void to_json(json& j, const ClassificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j = {{"schema_version", kSchemaVersion}, {"command", "repdim verify"},
       {"n", r.n}, {"bound", r.bound.str()}, {"mu1_cap_doubled", r.mu1_cap_doubled},
       {"passed", r.passed()}, {"checks", checks}, {"hits", hits_json(r.hits)}};
}

void from_json(const json& j, ClassificationReport& r) {
  check_schema(j);
  j.at("n").get_to(r.n);
  r.bound = big_from(j.at("bound"));
  j.at("mu1_cap_doubled").get_to(r.mu1_cap_doubled);
  r.checks.clear();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                        c.at("detail").get<std::string>()});
  r.hits = hits_from(j.at("hits"), r.n);
}

namespace {

json bound_row(const BoundReport& r) {
  json comparisons = json::object();
  for (const auto& c : r.comparisons) comparisons[c.name] = c.holds;
  json row = {{"n", r.n}, {"ks", r.ks}, {"flag_dim", r.flag_dim},
              {"isospectral", r.isospectral}, {"gunther", r.gunther},
              {"whitney", r.whitney}, {"isospectral_status", r.isospectral_status},
              {"comparisons", comparisons},
              {"comparison_order", json::array()}};
  for (const auto& c : r.comparisons) row["comparison_order"].push_back(c.name);
  row["group_order"] = r.group_order ? json(*r.group_order) : json(nullptr);
  row["wang"] = r.wang ? json(*r.wang) : json(nullptr);
  return row;
}

BoundReport bound_from_row(const json& j) {
  BoundReport r;
  j.at("n").get_to(r.n);
  j.at("ks").get_to(r.ks);
  j.at("flag_dim").get_to(r.flag_dim);
  j.at("isospectral").get_to(r.isospectral);
  j.at("gunther").get_to(r.gunther);
  j.at("whitney").get_to(r.whitney);
  j.at("isospectral_status").get_to(r.isospectral_status);
  for (const auto& name : j.at("comparison_order"))
    r.comparisons.push_back({name.get<std::string>(),
                             j.at("comparisons").at(name.get<std::string>()).get<bool>()});
  if (!j.at("group_order").is_null()) r.group_order = j.at("group_order").get<Count>();
  if (!j.at("wang").is_null()) r.wang = j.at("wang").get<Count>();
  return r;
}

}  // namespace

void to_json(json& j, const BoundReport& r) {
  j = bound_row(r);
  j["schema_version"] = kSchemaVersion;
  j["command"] = "bounds";
}

void from_json(const json& j, BoundReport& r) {
  check_schema(j);
  r = bound_from_row(j);
}

void to_json(json& j, const SweepReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(bound_row(row));
  j = {{"schema_version", kSchemaVersion}, {"command", "bounds sweep"},
       {"max_n", r.max_n}, {"all_gunther_hold", r.all_gunther_hold}, {"rows", rows}};
}

void from_json(const json& j, SweepReport& r) {
  check_schema(j);
  j.at("max_n").get_to(r.max_n);
  j.at("all_gunther_hold").get_to(r.all_gunther_hold);
  r.rows.clear();
  for (const auto& row : j.at("rows")) r.rows.push_back(bound_from_row(row));
}

}  // namespace flagmodel
