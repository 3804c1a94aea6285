#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "nearfield/atlas.hpp"

namespace nearfield {

namespace {

void append_number(std::string& out, double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  out += buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(std::string_view field, std::size_t line) {
  const std::string tmp(field);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size() || errno == ERANGE) {
    throw InvalidArgument("csv line " + std::to_string(line) + ": bad number '" + tmp + "'");
  }
  return value;
}

Branch parse_branch_field(std::string_view field, std::size_t line) {
  if (auto b = parse_branch(field)) return *b;
  throw InvalidArgument("csv line " + std::to_string(line) + ": bad branch '" +
                        std::string(field) + "'");
}

Branch branch_from_json(const nlohmann::ordered_json& j) {
  if (auto b = parse_branch(j.get<std::string>())) return *b;
  throw InvalidArgument("json: unknown branch tag");
}

nlohmann::ordered_json check_json(const BoundaryCheck& check) {
  nlohmann::ordered_json j;
  j["max_rel_error"] = check.max_rel_error;
  j["theta_at_max_deg"] = check.theta_at_max * (180.0 / kPi);
  j["pass"] = check.pass;
  return j;
}

}  // namespace

std::string to_csv(std::span<const SweepRow> rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const SweepRow& row : rows) {
    for (double v : {row.theta_deg, row.dF_array, row.dN_array, row.dF_single, row.dN_single}) {
      append_number(out, v);
      out += ',';
    }
    out += to_string(row.branch_F);
    out += ',';
    out += to_string(row.branch_N);
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) {
    throw InvalidArgument("csv: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 7) {
      throw InvalidArgument("csv line " + std::to_string(i + 1) + ": expected 7 fields");
    }
    rows.push_back({parse_number(f[0], i + 1), parse_number(f[1], i + 1),
                    parse_number(f[2], i + 1), parse_number(f[3], i + 1),
                    parse_number(f[4], i + 1), parse_branch_field(f[5], i + 1),
                    parse_branch_field(f[6], i + 1)});
  }
  return rows;
}

nlohmann::ordered_json to_json(std::span<const SweepRow> rows) {
  auto out = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json j;
    j["theta_deg"] = row.theta_deg;
    j["dF_array"] = row.dF_array;
    j["dN_array"] = row.dN_array;
    j["dF_single"] = row.dF_single;
    j["dN_single"] = row.dN_single;
    j["branch_F"] = to_string(row.branch_F);
    j["branch_N"] = to_string(row.branch_N);
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<SweepRow> rows_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw InvalidArgument("json: sweep must be an array");
  std::vector<SweepRow> rows;
  try {
    for (const auto& r : j) {
      rows.push_back({r.at("theta_deg").get<double>(), r.at("dF_array").get<double>(),
                      r.at("dN_array").get<double>(), r.at("dF_single").get<double>(),
                      r.at("dN_single").get<double>(), branch_from_json(r.at("branch_F")),
                      branch_from_json(r.at("branch_N"))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("json: ") + e.what());
  }
  return rows;
}

nlohmann::ordered_json to_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["D_over_lambda"] = report.aperture_wavelengths;
  j["grid_size"] = report.grid_size;
  j["tolerance"] = report.tolerance;
  j["fraunhofer"] = check_json(report.fraunhofer);
  j["fresnel"] = check_json(report.fresnel);
  j["pass"] = report.pass;
  return j;
}

nlohmann::ordered_json to_json(const SwitchAngles& angles) {
  constexpr double kDeg = 180.0 / kPi;
  nlohmann::ordered_json j;
  j["theta_F_deg"] = angles.theta_F * kDeg;
  j["theta_N1_deg"] = angles.theta_N1 * kDeg;
  j["theta_N2_deg"] = angles.theta_N2 * kDeg;
  j["theta_N1_mirror_deg"] = angles.theta_N1_mirror * kDeg;
  j["theta_N2_mirror_deg"] = angles.theta_N2_mirror * kDeg;
  return j;
}

}  // namespace nearfield
