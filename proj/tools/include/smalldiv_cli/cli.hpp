#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace smalldiv::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kPrecision = 3,
  kInternal = 4,
  kIo = 5,
};

// Runs one command. args excludes the program name. JSON goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct PlotSeries {
  std::string name;
  std::vector<std::pair<std::string, std::string>> points;
};

// Writes "series,x,y" rows. Empty input is a precondition failure.
void emit_plot_data(const std::vector<PlotSeries>& series, const std::string& path);

}  // namespace smalldiv::cli
