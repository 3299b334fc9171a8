#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace medrank {

/// One judge's preference over m labeled objects. Rank values are positive
/// integers, smaller = preferred; equal values express a tie; an object a
/// judge did not rank is "unranked" (partial ranking). Only the relative
/// order of the values carries meaning.
///
/// Immutable after construction.
class Ranking {
 public:
  static constexpr int kUnranked = 0;  // internal sentinel in rank vectors

  // `ranks` uses kUnranked (= 0) for missing entries; all other entries must
  // be positive. At least one object must be ranked and labels must be
  // distinct and non-empty.
  Ranking(std::vector<std::string> labels, std::vector<int> ranks);

  // Labels generated as A, B, ..., Z, AA, AB, ...
  explicit Ranking(std::vector<int> ranks);

  int size() const { return static_cast<int>(ranks_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& ranks() const { return ranks_; }

  bool is_ranked(int i) const { return ranks_[i] != kUnranked; }
  std::optional<int> rank(int i) const {
    return is_ranked(i) ? std::optional<int>(ranks_[i]) : std::nullopt;
  }

  bool complete() const;
  int ranked_count() const;
  // Number of distinct rank values in use (tie groups).
  int group_count() const;

  // Dense form: ranked values relabeled to consecutive integers 1..g,
  // unranked entries preserved. Idempotent; order relations unchanged.
  Ranking canonical() const;
  bool is_canonical() const;

  // Inverts all order relations, preserving ties. Requires a complete
  // ranking; result is canonical. Applying it twice returns the canonical
  // form of the input.
  Ranking reversed() const;

  // "<D L (E-M) ...>" — objects best-to-worst, tied groups in parentheses.
  std::string to_ordering_string() const;
  // Rank values in label order, unranked as '-': "1 2 - 2".
  std::string to_rank_string() const;

  bool operator==(const Ranking& other) const {
    return labels_ == other.labels_ && ranks_ == other.ranks_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<int> ranks_;
};

// Free-function spellings of the member operations, for call sites that
// read better without the member syntax.
inline Ranking canonicalize(const Ranking& r) { return r.canonical(); }
inline Ranking reverse(const Ranking& r) { return r.reversed(); }

// Default object identifiers: A..Z, then AA, AB, ...
std::vector<std::string> default_labels(int m);

// Parses "1 2 - 3" (whitespace-separated ranks, '-' = unranked).
Ranking parse_ranking(const std::string& text,
                      const std::vector<std::string>& labels = {});

// Lexicographic order on canonical rank vectors; rankings must share labels.
bool ranking_less(const Ranking& a, const Ranking& b);

}  // namespace medrank
