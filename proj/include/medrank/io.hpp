#pragma once

#include <cstdint>
#include <string>

#include "medrank/dataset.hpp"

namespace medrank {

/// Reads a ranking dataset from CSV text. First row: object labels, with an
/// optional trailing `weight` column (case-insensitive). Data rows: one
/// positive integer rank per object, `-` or an empty cell for unranked, and
/// the row weight last when the header declares one. Lines starting with `#`
/// (and blank lines) are skipped. Malformed input raises ParseError carrying
/// 1-based row/column positions.
RankingDataset parse_dataset_text(const std::string& text);
RankingDataset parse_dataset(const std::string& path);

/// Dataset back to CSV: canonical ranks, `-` for unranked, weights to 12
/// significant digits. parse(write(d)) == d.
std::string format_dataset(const RankingDataset& dataset);
void write_dataset(const RankingDataset& dataset, const std::string& path);

/// Whole-file read; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

/// Writes via a temp file in the same directory plus an atomic rename, so a
/// failed run never leaves a partial file behind.
void atomic_write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content digest, printed as 16 hex digits; stamps reports so
/// a result can be matched to its exact input.
std::uint64_t fnv1a64(const std::string& content);
std::string digest_hex(const std::string& content);

}  // namespace medrank
