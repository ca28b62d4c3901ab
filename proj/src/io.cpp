#include "qep/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qep/errors.hpp"

namespace qep {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'", name);
  return *it;
}

double number_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number()) throw ParseError(std::string("field '") + name + "' must be a number", name);
  return v.get<double>();
}

Vector vector_field(const json& doc, const char* name, std::size_t n) {
  const json& v = field(doc, name);
  if (!v.is_array() || v.size() != n) {
    throw ParseError(std::string("field '") + name + "' must be an array of " + std::to_string(n) +
                         " numbers",
                     name);
  }
  std::vector<double> out;
  out.reserve(n);
  for (const json& e : v) {
    if (!e.is_number()) throw ParseError(std::string("field '") + name + "' has a non-number", name);
    out.push_back(e.get<double>());
  }
  return Vector(std::move(out));
}

Matrix matrix_field(const json& doc, const char* name, std::size_t n) {
  const json& v = field(doc, name);
  const std::string shape_msg = std::string("field '") + name + "' must be " + std::to_string(n) +
                                "x" + std::to_string(n) + " (array of row arrays)";
  if (!v.is_array() || v.size() != n) throw ParseError(shape_msg, name);
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const json& row : v) {
    if (!row.is_array() || row.size() != n) throw ParseError(shape_msg, name);
    for (const json& e : row) {
      if (!e.is_number()) throw ParseError(std::string("field '") + name + "' has a non-number", name);
      entries.push_back(e.get<double>());
    }
  }
  return Matrix(n, n, std::move(entries));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return rows;
}

}  // namespace

std::string instance_to_json(const AffineFractionalInstance& inst) {
  const BoxSet& box = inst.box();
  // The file format only carries cubes.
  json doc;
  doc["n"] = inst.dimension();
  doc["A"] = matrix_to_json(inst.a());
  doc["b"] = inst.b().values();
  doc["A1"] = matrix_to_json(inst.a1());
  doc["b1"] = inst.b1().values();
  doc["c"] = inst.c().values();
  doc["d"] = inst.d();
  doc["box_low"] = box.dimension() > 0 ? box.lo()[0] : 0.0;
  doc["box_high"] = box.dimension() > 0 ? box.hi()[0] : 0.0;
  return doc.dump(2);
}

AffineFractionalInstance instance_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "");
  }
  if (!doc.is_object()) throw ParseError("instance file must hold a JSON object", "");

  const json& n_field = field(doc, "n");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    throw ParseError("field 'n' must be a positive integer", "n");
  }
  const auto n = static_cast<std::size_t>(n_field.get<long long>());

  Matrix a = matrix_field(doc, "A", n);
  Vector b = vector_field(doc, "b", n);
  Matrix a1 = matrix_field(doc, "A1", n);
  Vector b1 = vector_field(doc, "b1", n);
  Vector c = vector_field(doc, "c", n);
  const double d = number_field(doc, "d");
  const double box_low = number_field(doc, "box_low");
  const double box_high = number_field(doc, "box_high");
  if (!(box_low <= box_high)) throw ParseError("box_low must not exceed box_high", "box_low");

  try {
    return AffineFractionalInstance(std::move(a), std::move(b), std::move(a1), std::move(b1),
                                    std::move(c), d, BoxSet::cube(n, box_low, box_high));
  } catch (const DomainError& e) {
    throw ParseError(std::string("field 'd': ") + e.what(), "d");
  }
}

void write_instance_file(const AffineFractionalInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << instance_to_json(inst) << '\n';
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

AffineFractionalInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", "");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trace_csv(const SolveReport& report, std::ostream& out) {
  out << "k,alpha,step_norm,g_raw_norm,residual\n";
  for (const IterationRecord& rec : report.trace) {
    out << rec.k << ',' << format_real(rec.alpha) << ',' << format_real(rec.step_norm) << ','
        << format_real(rec.g_raw_norm) << ',';
    if (rec.residual) out << format_real(*rec.residual);
    out << '\n';
  }
}

void write_trace_csv(const SolveReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_trace_csv(report, out);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<TraceRow> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "k,alpha,step_norm,g_raw_norm,residual") {
    throw ParseError("trace CSV: unexpected header", "header");
  }
  std::vector<TraceRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (cells.size() != 5) throw ParseError("trace CSV: expected 5 columns", "row");
    TraceRow row;
    row.k = std::stoull(cells[0]);
    row.alpha = std::strtod(cells[1].c_str(), nullptr);
    row.step_norm = std::strtod(cells[2].c_str(), nullptr);
    row.g_raw_norm = std::strtod(cells[3].c_str(), nullptr);
    if (!cells[4].empty()) row.residual = std::strtod(cells[4].c_str(), nullptr);
    rows.push_back(row);
  }
  return rows;
}

void write_benchmark_csv(const BenchmarkReport& report, std::ostream& out) {
  out << "n,n_prob,n_success,mean_time_seconds,mean_error\n";
  for (const BenchmarkRow& row : report.rows) {
    out << row.n << ',' << row.n_prob << ',' << row.n_success << ','
        << format_real(row.mean_time_seconds) << ',' << format_real(row.mean_error) << '\n';
  }
}

void write_benchmark_table(const BenchmarkReport& report, std::ostream& out) {
  out << "variant " << to_string(report.variant) << ", alpha_k = " << report.scale
      << "/(k+1), seed " << report.seed << '\n';
  out << std::setw(6) << "n" << std::setw(10) << "N. prob." << std::setw(16) << "N. succ. prob."
      << std::setw(16) << "CPU-times(s)" << std::setw(14) << "Error" << '\n';
  const auto flags = out.flags();
  for (const BenchmarkRow& row : report.rows) {
    out << std::setw(6) << row.n << std::setw(10) << row.n_prob << std::setw(16) << row.n_success
        << std::fixed << std::setprecision(6) << std::setw(16) << row.mean_time_seconds
        << std::setw(14) << row.mean_error;
    out.flags(flags);
    if (row.n_failed > 0) out << "  (" << row.n_failed << " failed)";
    out << '\n';
  }
}

std::string paramonotonicity_to_json(const ParamonotonicityReport& report) {
  json doc;
  doc["a_hat"] = matrix_to_json(report.a_hat);
  doc["a_hat_sym"] = matrix_to_json(report.a_hat_sym);
  doc["min_eigenvalue"] = report.min_eigenvalue;
  doc["rank_sym"] = report.rank_sym;
  doc["rank_a_hat"] = report.rank_a_hat;
  doc["verdict"] = report.verdict;
  doc["tol"] = report.tol;
  doc["psd_slack"] = report.psd_slack;
  return doc.dump(2);
}

}  // namespace qep
