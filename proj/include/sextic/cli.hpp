#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sextic::cli {

struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
  void validate() const;
};

void write_csv(const OutputRecord& rec, std::ostream& os);
void write_json(const OutputRecord& rec, std::ostream& os);

// "1..10", "1,3,5", "2..4,9"; throws std::invalid_argument on malformed or empty input.
std::vector<int> parse_branch_list(const std::string& text);
// "MIN:MAX:STEP"
std::vector<double> parse_grid(const std::string& text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sextic::cli
