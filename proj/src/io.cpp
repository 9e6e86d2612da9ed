#include "gpot/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gpot {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str())
        throw InvalidInput("malformed CSV value in " + path + ": " + cell);
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InvalidInput("ragged CSV rows in " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw EmptyInput("empty CSV file: " + path);
  return rows;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write file: " + path);
  return out;
}

json kernel_to_json(const KernelSpec& k) {
  json j;
  j["family"] = k.name();
  if (k.family == KernelSpec::Family::Polynomial)
    j["degree"] = k.degree;
  else
    j["param"] = k.param;
  return j;
}

KernelSpec kernel_from_json(const json& j, int d) {
  if (!j.contains("family"))
    throw InvalidConfig("kernel spec: missing \"family\"");
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "se")
    return KernelSpec::squared_exponential(j.at("param").get<double>(), d);
  if (fam == "exp")
    return KernelSpec::exponential(j.at("param").get<double>(), d);
  if (fam == "poly")
    return KernelSpec::polynomial(j.at("degree").get<int>(), d);
  throw InvalidConfig("kernel spec: unknown family \"" + fam + "\"");
}

}  // namespace

Matrix read_matrix_csv(const std::string& path) {
  const auto rows = read_csv_rows(path);
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
  auto out = open_out(path);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

Vector read_vector_csv(const std::string& path) {
  const Matrix m = read_matrix_csv(path);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw InvalidInput("expected a single-row or single-column CSV: " + path);
}

std::string report_to_json(const DivergenceReport& rep) {
  json j;
  j["w2_sq"] = rep.w2_sq;
  j["ot_eps"] = json::object();
  for (const auto& [eps, v] : rep.ot_eps) j["ot_eps"][format_double(eps)] = v;
  j["sinkhorn"] = json::object();
  for (const auto& [eps, v] : rep.sinkhorn)
    j["sinkhorn"][format_double(eps)] = v;
  j["hs_sq"] = rep.hs_sq;
  return j.dump(2) + "\n";
}

void write_report_json(const std::string& path, const DivergenceReport& rep) {
  open_out(path) << report_to_json(rep);
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::string out = "mode,sweep_value,trial,metric,epsilon,value\n";
  for (const auto& r : rows) {
    out += r.mode;
    out += ',' + std::to_string(r.sweep_value);
    out += ',' + std::to_string(r.trial);
    out += ',' + r.metric;
    out += ',';
    if (!std::isnan(r.epsilon)) out += format_double(r.epsilon);
    out += ',' + format_double(r.value);
    out += '\n';
  }
  return out;
}

void write_rows_csv(const std::string& path,
                    const std::vector<ResultRow>& rows) {
  open_out(path) << rows_to_csv(rows);
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("config: invalid JSON: ") + e.what());
  }
  try {
    ExperimentConfig cfg;
    cfg.d = j.at("d").get<int>();
    cfg.kernel1 = kernel_from_json(j.at("kernel1"), cfg.d);
    cfg.kernel2 = kernel_from_json(j.at("kernel2"), cfg.d);
    cfg.m_grid = j.at("m_grid").get<std::vector<int>>();
    if (j.contains("n_grid")) cfg.n_grid = j.at("n_grid").get<std::vector<int>>();
    if (j.contains("eps_list"))
      cfg.eps_list = j.at("eps_list").get<std::vector<double>>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "gram_sweep")
      cfg.mode = SweepMode::GramSweep;
    else if (mode == "sample_sweep")
      cfg.mode = SweepMode::SampleSweep;
    else
      throw InvalidConfig("config: unknown mode \"" + mode + "\"");
    if (j.contains("innovation")) {
      const std::string inn = j.at("innovation").get<std::string>();
      if (inn == "gaussian")
        cfg.innovation = Innovation::Gaussian;
      else if (inn == "uniform")
        cfg.innovation = Innovation::UniformScaled;
      else
        throw InvalidConfig("config: unknown innovation \"" + inn + "\"");
    }
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("config: ") + e.what());
  }
}

ExperimentConfig read_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment_config(ss.str());
}

void write_path_sample(const std::string& prefix, const PathSample& z,
                       const KernelSpec& kernel) {
  write_matrix_csv(prefix + "_Z.csv", z.z);
  write_matrix_csv(prefix + "_X.csv", z.x.coords);
  json meta;
  meta["d"] = z.x.d;
  meta["m"] = z.x.m;
  meta["N"] = z.n;
  meta["kernel"] = kernel_to_json(kernel);
  meta["seed"] = z.seed;
  meta["innovation"] =
      z.innovation == Innovation::Gaussian ? "gaussian" : "uniform";
  open_out(prefix + "_meta.json") << meta.dump(2) << "\n";
}

}  // namespace gpot
