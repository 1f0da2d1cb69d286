#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freqspec/bit_vector.hpp"

namespace freqspec {

/// Original item identifier as written in the input file.
using ItemId = std::uint64_t;
/// Dense attribute (column) index, 0..n_attrs-1.
using ColumnIndex = std::uint32_t;
/// Per-attribute support counts, indexed by column.
using ColumnMarginals = std::vector<std::size_t>;

/// Thrown for malformed FIMI input. line() is 1-based; 0 means "whole input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable vertical 0/1 database: one BitVector per attribute over rows.
class TransactionDatabase {
 public:
  /// Validates that every column has length n_rows and at least one set bit,
  /// and that item_labels is injective and parallel to columns.
  TransactionDatabase(std::size_t n_rows, std::vector<BitVector> columns,
                      std::vector<ItemId> item_labels);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_attrs() const { return columns_.size(); }

  const BitVector& column(ColumnIndex attr) const;
  ItemId item_label(ColumnIndex attr) const;
  std::size_t support(ColumnIndex attr) const { return column(attr).count(); }

  std::span<const BitVector> columns() const { return columns_; }
  std::span<const ItemId> item_labels() const { return item_labels_; }

  /// Mask with every row set; the support of the empty itemset.
  BitVector all_rows() const { return BitVector(n_rows_, true); }

  bool operator==(const TransactionDatabase&) const = default;

 private:
  std::size_t n_rows_;
  std::vector<BitVector> columns_;
  std::vector<ItemId> item_labels_;
};

/// Reads FIMI text: one transaction per non-blank line, items as base-10
/// non-negative integers separated by spaces or tabs, LF or CRLF endings.
/// Duplicate items in a line are merged; blank lines are skipped. Columns are
/// ordered by ascending original item id.
TransactionDatabase parse_fimi(std::istream& in);
TransactionDatabase parse_fimi_text(std::string_view text);

/// Opens and parses a FIMI file. Throws std::runtime_error if unreadable.
TransactionDatabase load_fimi_file(const std::filesystem::path& path);

/// Writes rows as ascending original item ids, one line per row.
void write_fimi(const TransactionDatabase& db, std::ostream& out);

/// popcount(current AND column(attr)).
std::size_t support_of_intersection(const TransactionDatabase& db, const BitVector& current,
                                    ColumnIndex attr);

/// Support of an itemset given as column indices; the empty itemset has
/// support n_rows.
std::size_t itemset_support(const TransactionDatabase& db, std::span<const ColumnIndex> items);

ColumnMarginals column_marginals(const TransactionDatabase& db);

/// Independently shuffles every column's bits (Fisher-Yates). Marginals are
/// preserved exactly and inter-column structure is destroyed. Deterministic
/// in seed.
TransactionDatabase randomize_marginals(const TransactionDatabase& db, std::uint64_t seed);

}  // namespace freqspec
