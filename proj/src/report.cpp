#include "opsf/report.hpp"

#include <fstream>

#include "opsf/error.hpp"
#include "opsf/version.hpp"

namespace opsf {

Json rational_json(const Rational& v) { return rational_str(v); }

Json rational_list_json(const std::vector<Rational>& vs) {
  Json arr = Json::array();
  for (const Rational& v : vs) arr.push_back(rational_str(v));
  return arr;
}

Json xpoly_json(const RPoly& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(rational_str(c));
  return arr;
}

Json report_header(const std::string& subcommand, const Json& config) {
  Json doc;
  doc["tool"] = "opsf";
  doc["version"] = kVersion;
  doc["subcommand"] = subcommand;
  doc["config"] = config;
  return doc;
}

void write_json_file(const Json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::UsageError, "cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  if (!out.flush())
    fail(ErrorKind::UsageError, "failed while writing " + path);
}

void write_csv_file(const std::string& path, const std::string& header,
                    const std::vector<std::string>& rows) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::UsageError, "cannot open " + path + " for writing");
  out << header << '\n';
  for (const std::string& row : rows) out << row << '\n';
  if (!out.flush())
    fail(ErrorKind::UsageError, "failed while writing " + path);
}

}  // namespace opsf
