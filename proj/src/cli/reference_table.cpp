#include "hermitetf/cli/reference_table.hpp"

#include "reference_data.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace hermitetf::cli {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) {
    out.push_back(field);
  }
  return out;
}

double to_double(const std::string& s, int line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::runtime_error("reference table line " + std::to_string(line_no) +
                             ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

ReferenceTable parse_reference_table(std::string_view csv) {
  ReferenceTable table;
  std::istringstream in{std::string(csv)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  bool slope_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto fields = split_fields(line);
    if (!header_seen) {
      if (line != "x,y_present,y_liao,status") {
        throw std::runtime_error("reference table: unexpected header '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) {
      throw std::runtime_error("reference table line " + std::to_string(line_no) +
                               ": expected 4 fields");
    }
    if (fields[0] == "slope") {
      table.slope_present = to_double(fields[1], line_no);
      table.slope_reference = to_double(fields[2], line_no);
      slope_seen = true;
      continue;
    }
    if (fields[3] != "ok" && fields[3] != "suspect") {
      throw std::runtime_error("reference table line " + std::to_string(line_no) +
                               ": status must be ok or suspect");
    }
    table.rows.push_back(ReferenceRow{to_double(fields[0], line_no), to_double(fields[1], line_no),
                                      to_double(fields[2], line_no), fields[3] == "suspect"});
  }
  if (!header_seen || !slope_seen || table.rows.empty()) {
    throw std::runtime_error("reference table: missing header, slope row or data rows");
  }
  return table;
}

const ReferenceTable& bundled_reference_table() {
  static const ReferenceTable table = parse_reference_table(detail::kReferenceTableCsv);
  return table;
}

}  // namespace hermitetf::cli
