#pragma once

#include <string_view>
#include <vector>

namespace hermitetf::cli {

struct ReferenceRow {
  double x = 0.0;
  double y_present = 0.0;  ///< published collocation value
  double y_liao = 0.0;     ///< published series value
  bool suspect = false;    ///< shown, never scored
};

struct ReferenceTable {
  std::vector<ReferenceRow> rows;
  double slope_present = 0.0;
  double slope_reference = 0.0;  ///< Kobayashi's y'(0)
};

/// Parses the bundled CSV layout: '#' comment lines, a header
/// `x,y_present,y_liao,status`, data rows with status `ok` or `suspect`, and one
/// row whose x field is `slope`. Throws std::runtime_error on malformed input.
ReferenceTable parse_reference_table(std::string_view csv);

/// The table compiled into the binary from data/reference_table1.csv.
const ReferenceTable& bundled_reference_table();

}  // namespace hermitetf::cli
