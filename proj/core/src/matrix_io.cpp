#include "rankcal/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rankcal/errors.hpp"

namespace rankcal {

namespace {

double parse_number(const std::string& token, int row, int col) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1) +
                     ": cannot parse \"" + token + "\" as a number");
  return value;
}

}  // namespace

ComparisonMatrix parse_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::vector<double> row;
    std::stringstream cells(line);
    std::string token;
    while (std::getline(cells, token, ','))
      row.push_back(parse_number(token, static_cast<int>(rows.size()), static_cast<int>(row.size())));
    if (row.empty())
      throw ParseError("row " + std::to_string(rows.size() + 1) + " has no entries");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  const int n = static_cast<int>(rows.size());
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return ComparisonMatrix(n, std::move(entries));
}

ComparisonMatrix load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  return parse_matrix_csv(in);
}

std::string format_matrix_csv(const ComparisonMatrix& m) {
  std::string out;
  char buf[64];
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out += buf;
      out += (j + 1 < n) ? "," : "\n";
    }
  }
  return out;
}

}  // namespace rankcal
