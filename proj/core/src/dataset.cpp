#include "freqspec/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <unordered_set>

#include "freqspec/rng.hpp"

namespace freqspec {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

TransactionDatabase::TransactionDatabase(std::size_t n_rows, std::vector<BitVector> columns,
                                         std::vector<ItemId> item_labels)
    : n_rows_(n_rows), columns_(std::move(columns)), item_labels_(std::move(item_labels)) {
  if (columns_.size() != item_labels_.size()) {
    throw std::invalid_argument("TransactionDatabase: columns and item_labels differ in size");
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].size() != n_rows_) {
      throw std::invalid_argument("TransactionDatabase: column " + std::to_string(j) +
                                  " has length " + std::to_string(columns_[j].size()) +
                                  ", expected " + std::to_string(n_rows_));
    }
    if (columns_[j].none()) {
      throw std::invalid_argument("TransactionDatabase: column " + std::to_string(j) +
                                  " has zero support");
    }
  }
  std::unordered_set<ItemId> seen(item_labels_.begin(), item_labels_.end());
  if (seen.size() != item_labels_.size()) {
    throw std::invalid_argument("TransactionDatabase: duplicate item label");
  }
}

const BitVector& TransactionDatabase::column(ColumnIndex attr) const {
  if (attr >= columns_.size()) {
    throw std::out_of_range("attribute index " + std::to_string(attr) + " out of range " +
                            std::to_string(columns_.size()));
  }
  return columns_[attr];
}

ItemId TransactionDatabase::item_label(ColumnIndex attr) const {
  if (attr >= item_labels_.size()) {
    throw std::out_of_range("attribute index " + std::to_string(attr) + " out of range " +
                            std::to_string(item_labels_.size()));
  }
  return item_labels_[attr];
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::vector<ItemId> parse_line(std::string_view line, std::size_t line_no) {
  std::vector<ItemId> items;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_blank(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_blank(line[end])) ++end;
    const std::string_view token = line.substr(pos, end - pos);

    ItemId value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(line_no, "item id out of range: '" + std::string(token) + "'");
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    items.push_back(value);
    pos = end;
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

}  // namespace

TransactionDatabase parse_fimi_text(std::string_view text) {
  std::vector<std::vector<ItemId>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto items = parse_line(line, line_no);
    if (!items.empty()) rows.push_back(std::move(items));

    if (end == text.size()) break;
    start = end + 1;
  }
  if (rows.empty()) throw ParseError(0, "input contains no transactions");

  std::vector<ItemId> labels;
  for (const auto& row : rows) labels.insert(labels.end(), row.begin(), row.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::vector<BitVector> columns(labels.size(), BitVector(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (ItemId id : rows[r]) {
      const auto it = std::lower_bound(labels.begin(), labels.end(), id);
      columns[static_cast<std::size_t>(it - labels.begin())].set(r);
    }
  }
  return TransactionDatabase(rows.size(), std::move(columns), std::move(labels));
}

TransactionDatabase parse_fimi(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw std::runtime_error("read error while loading FIMI input");
  return parse_fimi_text(text);
}

TransactionDatabase load_fimi_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file '" + path.string() + "'");
  return parse_fimi(in);
}

void write_fimi(const TransactionDatabase& db, std::ostream& out) {
  // Columns are in ascending label order, so a column-major sweep per row
  // emits sorted ids.
  for (std::size_t r = 0; r < db.n_rows(); ++r) {
    bool first = true;
    for (std::size_t j = 0; j < db.n_attrs(); ++j) {
      if (!db.columns()[j].test(r)) continue;
      if (!first) out << ' ';
      out << db.item_labels()[j];
      first = false;
    }
    out << '\n';
  }
}

std::size_t support_of_intersection(const TransactionDatabase& db, const BitVector& current,
                                    ColumnIndex attr) {
  const BitVector& col = db.column(attr);
  if (current.size() != db.n_rows()) {
    throw std::invalid_argument("support_of_intersection: mask length " +
                                std::to_string(current.size()) + " != n_rows " +
                                std::to_string(db.n_rows()));
  }
  return intersection_count(current, col);
}

std::size_t itemset_support(const TransactionDatabase& db, std::span<const ColumnIndex> items) {
  BitVector mask = db.all_rows();
  for (ColumnIndex attr : items) mask &= db.column(attr);
  return mask.count();
}

ColumnMarginals column_marginals(const TransactionDatabase& db) {
  ColumnMarginals marginals;
  marginals.reserve(db.n_attrs());
  for (const BitVector& col : db.columns()) marginals.push_back(col.count());
  return marginals;
}

TransactionDatabase randomize_marginals(const TransactionDatabase& db, std::uint64_t seed) {
  const std::size_t n = db.n_rows();
  std::vector<BitVector> columns;
  columns.reserve(db.n_attrs());
  std::vector<char> bits(n);
  for (std::size_t j = 0; j < db.n_attrs(); ++j) {
    const BitVector& src = db.columns()[j];
    for (std::size_t r = 0; r < n; ++r) bits[r] = src.test(r) ? 1 : 0;

    PathRng rng(derive_seed(seed, j));
    for (std::size_t i = n; i > 1; --i) {
      const auto k = static_cast<std::size_t>(rng.uniform_below(i));
      std::swap(bits[i - 1], bits[k]);
    }

    BitVector out(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (bits[r]) out.set(r);
    }
    columns.push_back(std::move(out));
  }
  return TransactionDatabase(n, std::move(columns),
                             std::vector<ItemId>(db.item_labels().begin(), db.item_labels().end()));
}

}  // namespace freqspec
