#pragma once

#include <Eigen/Dense>
#include <string>

#include "tebeam/analysis.hpp"
#include "tebeam/spectral.hpp"
#include "tebeam/timestepper.hpp"

namespace tebeam {

/// Fixed numeric format shared by every artifact: %.17g, '.' decimal
/// separator. Rows are '\n'-terminated, including the last.
std::string format_double(double v);

void write_trace_csv(const std::string& path, const EnergyTrace& trace);
void write_spectrum_csv(const std::string& path, const EigenResult& eig);
void write_scan_csv(const std::string& path, const ResolventScan& scan);
void write_convergence_csv(const std::string& path, const ConvergenceStudy& study);

/// MatrixMarket dense array format (column major).
void write_matrix_market(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_market(const std::string& path);

std::string report_to_json(const RegimeReport& report);
std::string decay_to_json(const DecayFit& fit, const std::string& config_hash);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace tebeam
