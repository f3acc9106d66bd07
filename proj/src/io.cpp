// Copyright 2026 The lfplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lfplay/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "lfplay/errors.hpp"
#include "lfplay/rng.hpp"

namespace lfplay {

std::string FormatDouble(double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

namespace {

// Splits "MxN" (also accepting the unicode multiplication sign) into (M, N).
std::pair<std::size_t, std::size_t> ParseDims(const std::string& text) {
  std::string normalized = text;
  const std::string times = "×";  // ×
  for (auto pos = normalized.find(times); pos != std::string::npos;
       pos = normalized.find(times))
    normalized.replace(pos, times.size(), "x");
  const auto sep = normalized.find('x');
  if (sep == std::string::npos)
    throw ConfigError("expected dimensions like 3x4 in '" + text + "'");
  try {
    const long rows = std::stol(normalized.substr(0, sep));
    const long cols = std::stol(normalized.substr(sep + 1));
    if (rows < 1 || cols < 1) throw ConfigError("dimensions must be positive");
    return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols)};
  } catch (const std::logic_error&) {
    throw ConfigError("bad dimensions in '" + text + "'");
  }
}

}  // namespace

PayoffMatrix LoadPayoff(const std::string& source) {
  if (source == "matching-pennies")
    return PayoffMatrix(2, 2, {1.0, -1.0, -1.0, 1.0});
  if (source.rfind("zero:", 0) == 0) {
    const auto [rows, cols] = ParseDims(source.substr(5));
    return PayoffMatrix(rows, cols, std::vector<double>(rows * cols, 0.0));
  }
  if (source.rfind("random:", 0) == 0) {
    const std::string rest = source.substr(7);
    const auto seed_sep = rest.rfind(':');
    if (seed_sep == std::string::npos)
      throw ConfigError("random payoff needs a seed: random:MxN:SEED");
    const auto [rows, cols] = ParseDims(rest.substr(0, seed_sep));
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(rest.substr(seed_sep + 1));
    } catch (const std::logic_error&) {
      throw ConfigError("bad seed in '" + source + "'");
    }
    Xoshiro256 rng(seed);
    std::vector<double> entries(rows * cols);
    for (double& v : entries) v = rng.Uniform(-1.0, 1.0);
    return PayoffMatrix(rows, cols, std::move(entries));
  }
  std::string text;
  try {
    text = ReadFile(source);
  } catch (const Error&) {
    throw ConfigError("payoff source '" + source +
                      "' is neither a builtin nor a readable file");
  }
  return ParsePayoffCsv(text);
}

PayoffMatrix ParsePayoffCsv(const std::string& text) {
  std::vector<double> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::istringstream lines(text);
  std::string line;
  int row_number = 0;
  while (std::getline(lines, line)) {
    ++row_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t row_cells = 0;
    std::size_t pos = 0;
    int column_number = 0;
    while (true) {
      ++column_number;
      const auto comma = line.find(',', pos);
      const std::string cell =
          line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      double value = 0.0;
      const char* begin = cell.data();
      const char* end = begin + cell.size();
      while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
      while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
      const auto parsed = std::from_chars(begin, end, value);
      if (parsed.ec != std::errc() || parsed.ptr != end)
        throw ParseError("non-numeric cell at row " + std::to_string(row_number) +
                             ", column " + std::to_string(column_number),
                         row_number, column_number);
      entries.push_back(value);
      ++row_cells;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (rows == 0) {
      cols = row_cells;
    } else if (row_cells != cols) {
      throw ParseError("ragged row " + std::to_string(row_number) + ": expected " +
                           std::to_string(cols) + " cells, found " + std::to_string(row_cells),
                       row_number, static_cast<int>(row_cells));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("empty payoff file", 1, 1);
  return PayoffMatrix(rows, cols, std::move(entries));
}

std::string PayoffToCsv(const PayoffMatrix& matrix) {
  std::string out;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out += ',';
      out += FormatDouble(matrix.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string TraceToCsv(const Trace& trace) {
  std::string out = "iteration,step_size,gap,theory_bound\n";
  for (const auto& rec : trace.records) {
    out += std::to_string(rec.t);
    out += ',';
    out += FormatDouble(rec.alpha);
    out += ',';
    out += FormatDouble(rec.gap);
    out += ',';
    if (rec.bound) out += FormatDouble(*rec.bound);
    out += '\n';
  }
  return out;
}

std::string AggregateToCsv(const AggregateTrace& aggregate) {
  std::string out = "iteration,mean_gap,std_gap,ci95,event_fraction,conditional_mean_gap\n";
  for (const auto& cp : aggregate.checkpoints) {
    out += std::to_string(cp.t);
    out += ',';
    out += FormatDouble(cp.mean_gap);
    out += ',';
    out += FormatDouble(cp.std_gap);
    out += ',';
    out += FormatDouble(cp.ci95_halfwidth);
    out += ',';
    out += FormatDouble(aggregate.event_fraction);
    out += ',';
    if (cp.conditional_mean_gap) out += FormatDouble(*cp.conditional_mean_gap);
    out += '\n';
  }
  return out;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lfplay
