#include "tebeam/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tebeam {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_trace_csv(const std::string& path, const EnergyTrace& trace) {
  std::ostringstream os;
  os << "t,E,dissipation_mid,balance_residual\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    os << format_double(trace.times[i]) << ',' << format_double(trace.energies[i]) << ','
       << format_double(trace.dissipations[i]) << ','
       << format_double(trace.balance_residuals[i]) << '\n';
  }
  write_text_file(path, os.str());
}

void write_spectrum_csv(const std::string& path, const EigenResult& eig) {
  std::ostringstream os;
  os << "re,im\n";
  for (const auto& ev : eig.eigenvalues) {
    os << format_double(ev.real()) << ',' << format_double(ev.imag()) << '\n';
  }
  write_text_file(path, os.str());
}

void write_scan_csv(const std::string& path, const ResolventScan& scan) {
  std::ostringstream os;
  os << "lambda,norm,scaled\n";
  for (std::size_t i = 0; i < scan.lambdas.size(); ++i) {
    os << format_double(scan.lambdas[i]) << ',' << format_double(scan.norms[i]) << ','
       << format_double(scan.scaled[i]) << '\n';
  }
  write_text_file(path, os.str());
}

void write_convergence_csv(const std::string& path, const ConvergenceStudy& study) {
  std::ostringstream os;
  os << "n,probe,error,order\n";
  for (std::size_t i = 0; i < study.sizes.size(); ++i) {
    os << study.sizes[i] << ',' << format_double(study.probes[i]) << ',';
    os << (i < study.errors.size() ? format_double(study.errors[i]) : "") << ',';
    os << (i > 0 && i - 1 < study.orders.size() ? format_double(study.orders[i - 1]) : "");
    os << '\n';
  }
  write_text_file(path, os.str());
}

void write_matrix_market(const std::string& path, const Eigen::MatrixXd& m) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix array real general\n";
  os << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      os << format_double(m(i, j)) << '\n';
    }
  }
  write_text_file(path, os.str());
}

Eigen::MatrixXd read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string header;
  std::getline(in, header);
  if (header.rfind("%%MatrixMarket matrix array real", 0) != 0) {
    throw std::runtime_error("not a MatrixMarket array file: " + path);
  }
  Eigen::Index rows = 0, cols = 0;
  in >> rows >> cols;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (!(in >> m(i, j))) throw std::runtime_error("truncated MatrixMarket file: " + path);
    }
  }
  return m;
}

namespace {

nlohmann::json check_to_json(const CheckResult& c) {
  return {{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed},
          {"detail", c.detail}};
}

}  // namespace

std::string report_to_json(const RegimeReport& report) {
  nlohmann::json j;
  j["config_hash"] = report.config_hash;
  j["regime"] = {{"tag", report.regime.tag == Regime::Fast ? "FAST" : "SLOW"},
                 {"ell", report.regime.ell}};
  j["spectral_abscissa"] = report.spectral_abscissa;
  j["scan"] = {{"max_scaled", report.scan_max_scaled},
               {"argmax_lambda", report.scan_argmax_lambda},
               {"argmax_index", report.scan_argmax_index},
               {"samples", report.scan_samples},
               {"peak_in_lower_third", report.scan_peak_in_lower_third},
               {"upper_half_ripple", report.scan_upper_ripple}};
  j["energy"] = {{"initial", report.energy_initial}, {"final", report.energy_final}};
  if (report.decay_fitted) {
    j["decay_fit"] = {{"exponent", report.decay.exponent},
                      {"residual", report.decay.residual},
                      {"window", {report.decay.window_start, report.decay.window_end}},
                      {"samples_used", report.decay.samples_used},
                      {"label", "pre-asymptotic"}};
  }
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) j["checks"].push_back(check_to_json(c));
  j["all_passed"] = report.all_passed();
  return j.dump(2) + "\n";
}

std::string decay_to_json(const DecayFit& fit, const std::string& config_hash) {
  nlohmann::json j;
  j["config_hash"] = config_hash;
  j["exponent"] = fit.exponent;
  j["residual"] = fit.residual;
  j["window"] = {fit.window_start, fit.window_end};
  j["samples_used"] = fit.samples_used;
  j["label"] = "pre-asymptotic";
  return j.dump(2) + "\n";
}

}  // namespace tebeam
