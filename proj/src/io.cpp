#include "medrank/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "medrank/errors.hpp"

namespace medrank {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

bool iequals(const std::string& a, const char* b) {
  std::size_t i = 0;
  for (; i < a.size() && b[i]; ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return i == a.size() && b[i] == '\0';
}

bool parse_int(const std::string& cell, int& out) {
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !cell.empty();
}

bool parse_double(const std::string& cell, double& out) {
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !cell.empty();
}

}  // namespace

RankingDataset parse_dataset_text(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::stringstream ss(text);
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("dataset: empty file");

  std::vector<std::string> labels = split_csv(lines[0]);
  bool has_weights = false;
  if (!labels.empty() && iequals(labels.back(), "weight")) {
    has_weights = true;
    labels.pop_back();
  }
  if (labels.empty()) throw ParseError("dataset: header declares no objects");
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j].empty()) {
      throw ParseError("dataset: empty label in header", 0,
                       static_cast<int>(j) + 1);
    }
    if (labels[j].find_first_of(" \t") != std::string::npos) {
      throw ParseError("dataset: label '" + labels[j] +
                           "' contains whitespace",
                       0, static_cast<int>(j) + 1);
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (labels[i] == labels[j]) {
        throw ParseError("dataset: duplicate label '" + labels[j] + "'", 0,
                         static_cast<int>(j) + 1);
      }
    }
  }

  const int m = static_cast<int>(labels.size());
  const std::size_t expected = labels.size() + (has_weights ? 1 : 0);
  std::vector<RankingDataset::Row> rows;
  std::vector<bool> column_ranked(labels.size(), false);

  for (std::size_t r = 1; r < lines.size(); ++r) {
    const int row_no = static_cast<int>(r);  // 1-based data row
    const std::vector<std::string> cells = split_csv(lines[r]);
    if (cells.size() != expected) {
      throw ParseError("dataset: row " + std::to_string(row_no) + " has " +
                           std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(expected),
                       row_no, static_cast<int>(cells.size()));
    }
    std::vector<int> ranks(m, Ranking::kUnranked);
    for (int j = 0; j < m; ++j) {
      const std::string& cell = cells[j];
      if (cell.empty() || cell == "-") continue;
      int value = 0;
      if (!parse_int(cell, value)) {
        throw ParseError("dataset: row " + std::to_string(row_no) +
                             ", column " + labels[j] + ": '" + cell +
                             "' is not an integer rank",
                         row_no, j + 1);
      }
      if (value < 1) {
        throw ParseError("dataset: row " + std::to_string(row_no) +
                             ", column " + labels[j] + ": rank must be >= 1",
                         row_no, j + 1);
      }
      ranks[j] = value;
      column_ranked[j] = true;
    }
    if (std::count(ranks.begin(), ranks.end(), Ranking::kUnranked) == m) {
      throw ParseError("dataset: row " + std::to_string(row_no) +
                           " ranks no objects",
                       row_no);
    }
    double weight = 1.0;
    if (has_weights) {
      const std::string& cell = cells.back();
      if (!parse_double(cell, weight) || !(weight > 0.0) ||
          !std::isfinite(weight)) {
        throw ParseError("dataset: row " + std::to_string(row_no) +
                             ": weight '" + cell + "' must be a positive number",
                         row_no, m + 1);
      }
    }
    rows.push_back({Ranking(labels, std::move(ranks)), weight});
  }

  if (rows.empty()) throw ParseError("dataset: no data rows");
  for (std::size_t j = 0; j < column_ranked.size(); ++j) {
    if (!column_ranked[j]) {
      throw ParseError("dataset: column " + labels[j] +
                           " is never ranked by any row",
                       0, static_cast<int>(j) + 1);
    }
  }
  return RankingDataset(std::move(labels), std::move(rows));
}

RankingDataset parse_dataset(const std::string& path) {
  return parse_dataset_text(read_file(path));
}

std::string format_dataset(const RankingDataset& dataset) {
  std::string out;
  for (const auto& label : dataset.labels()) {
    out += label;
    out += ',';
  }
  out += "weight\n";
  char buf[64];
  for (const auto& row : dataset.rows()) {
    const auto& ranks = row.ranking.ranks();
    for (int v : ranks) {
      if (v == Ranking::kUnranked) {
        out += '-';
      } else {
        std::snprintf(buf, sizeof(buf), "%d", v);
        out += buf;
      }
      out += ',';
    }
    std::snprintf(buf, sizeof(buf), "%.12g", row.weight);
    out += buf;
    out += '\n';
  }
  return out;
}

void write_dataset(const RankingDataset& dataset, const std::string& path) {
  atomic_write_file(path, format_dataset(dataset));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading file: " + path);
  return buffer.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file for writing: " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("error writing file: " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

std::uint64_t fnv1a64(const std::string& content) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : content) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string digest_hex(const std::string& content) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(content)));
  return std::string(buf);
}

}  // namespace medrank
