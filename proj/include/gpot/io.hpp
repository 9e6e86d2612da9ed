#ifndef GPOT_IO_HPP
#define GPOT_IO_HPP

#include <string>
#include <vector>

#include "gpot/experiments.hpp"

namespace gpot {

/// Shortest round-trippable decimal form of v.
std::string format_double(double v);

Matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const Matrix& m);

Vector read_vector_csv(const std::string& path);

std::string report_to_json(const DivergenceReport& rep);
void write_report_json(const std::string& path, const DivergenceReport& rep);

std::string rows_to_csv(const std::vector<ResultRow>& rows);
void write_rows_csv(const std::string& path, const std::vector<ResultRow>& rows);

/// Config JSON with snake_case keys mirroring ExperimentConfig.
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig read_experiment_config(const std::string& path);

/// Z matrix + points + JSON sidecar, under `prefix`_Z.csv / _X.csv /
/// _meta.json.
void write_path_sample(const std::string& prefix, const PathSample& z,
                       const KernelSpec& kernel);

}  // namespace gpot

#endif
