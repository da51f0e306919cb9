#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "opsf/dense_poly.hpp"
#include "opsf/rational.hpp"

namespace opsf {

// Insertion-ordered documents so that identical configurations serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& v);
Json rational_list_json(const std::vector<Rational>& vs);

// Coefficient array of "p/q" strings, constant term first.
Json xpoly_json(const RPoly& p);

// Common report preamble: tool name, version, subcommand, and the full
// run configuration. Timing is deliberately excluded from report bytes;
// it goes to the log stream instead.
Json report_header(const std::string& subcommand, const Json& config);

void write_json_file(const Json& doc, const std::string& path);

void write_csv_file(const std::string& path, const std::string& header,
                    const std::vector<std::string>& rows);

}  // namespace opsf
