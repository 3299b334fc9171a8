#include "medrank/ranking.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace medrank {

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::string name;
    int v = i;
    do {
      name.insert(name.begin(), static_cast<char>('A' + v % 26));
      v = v / 26 - 1;
    } while (v >= 0);
    labels.push_back(name);
  }
  return labels;
}

Ranking::Ranking(std::vector<std::string> labels, std::vector<int> ranks)
    : labels_(std::move(labels)), ranks_(std::move(ranks)) {
  if (labels_.size() != ranks_.size()) {
    throw std::invalid_argument("ranking: labels and ranks differ in length");
  }
  if (labels_.empty()) {
    throw std::invalid_argument("ranking: no objects");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty() || !seen.insert(l).second) {
      throw std::invalid_argument("ranking: duplicate or empty label '" + l + "'");
    }
  }
  bool any = false;
  for (int r : ranks_) {
    if (r == kUnranked) continue;
    if (r < 1) throw std::invalid_argument("ranking: rank values must be positive");
    any = true;
  }
  if (!any) throw std::invalid_argument("ranking: every object is unranked");
}

// Note: `ranks` is passed by value (not moved) into the delegated call.
// Both argument expressions read it, and argument evaluation order is
// unspecified, so a move here could empty it before size() runs.
Ranking::Ranking(std::vector<int> ranks)
    : Ranking(default_labels(static_cast<int>(ranks.size())), ranks) {}

bool Ranking::complete() const {
  return std::all_of(ranks_.begin(), ranks_.end(),
                     [](int r) { return r != kUnranked; });
}

int Ranking::ranked_count() const {
  return static_cast<int>(std::count_if(ranks_.begin(), ranks_.end(),
                                        [](int r) { return r != kUnranked; }));
}

int Ranking::group_count() const {
  std::vector<int> present;
  for (int r : ranks_) {
    if (r != kUnranked) present.push_back(r);
  }
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  return static_cast<int>(present.size());
}

Ranking Ranking::canonical() const {
  std::vector<int> values;
  for (int r : ranks_) {
    if (r != kUnranked) values.push_back(r);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> dense(ranks_.size(), kUnranked);
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] == kUnranked) continue;
    const auto it = std::lower_bound(values.begin(), values.end(), ranks_[i]);
    dense[i] = static_cast<int>(it - values.begin()) + 1;
  }
  return Ranking(labels_, std::move(dense));
}

bool Ranking::is_canonical() const {
  const int g = group_count();
  for (int r : ranks_) {
    if (r != kUnranked && r > g) return false;
  }
  return true;
}

Ranking Ranking::reversed() const {
  if (!complete()) {
    throw std::invalid_argument("reverse: ranking must be complete");
  }
  Ranking dense = canonical();
  const int g = dense.group_count();
  std::vector<int> flipped(dense.ranks_.size());
  for (std::size_t i = 0; i < flipped.size(); ++i) {
    flipped[i] = g + 1 - dense.ranks_[i];
  }
  return Ranking(labels_, std::move(flipped));
}

std::string Ranking::to_ordering_string() const {
  std::map<int, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] != kUnranked) groups[ranks_[i]].push_back(labels_[i]);
  }
  std::ostringstream out;
  out << '<';
  bool first = true;
  for (const auto& [value, members] : groups) {
    if (!first) out << ' ';
    first = false;
    if (members.size() == 1) {
      out << members.front();
    } else {
      out << '(';
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out << '-';
        out << members[i];
      }
      out << ')';
    }
  }
  out << '>';
  return out.str();
}

std::string Ranking::to_rank_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i) out << ' ';
    if (ranks_[i] == kUnranked) {
      out << '-';
    } else {
      out << ranks_[i];
    }
  }
  return out.str();
}

Ranking parse_ranking(const std::string& text,
                      const std::vector<std::string>& labels) {
  std::istringstream in(text);
  std::vector<int> ranks;
  std::string token;
  while (in >> token) {
    if (token == "-") {
      ranks.push_back(Ranking::kUnranked);
      continue;
    }
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      ranks.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("ranking: bad rank token '" + token + "'");
    }
  }
  if (labels.empty()) return Ranking(std::move(ranks));
  return Ranking(labels, std::move(ranks));
}

bool ranking_less(const Ranking& a, const Ranking& b) {
  const std::vector<int> ra = a.canonical().ranks();
  const std::vector<int> rb = b.canonical().ranks();
  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
}

}  // namespace medrank
