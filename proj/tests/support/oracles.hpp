#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. They work on plain row lists and share no code with the core.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "freqspec/dataset.hpp"
#include "freqspec/isotonic.hpp"

namespace freqspec::testing {

using Rows = std::vector<std::set<std::uint32_t>>;

inline std::string rows_to_fimi(const Rows& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    bool first = true;
    for (auto item : row) {
      out << (first ? "" : " ") << item;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

/// Random rows over items 1..n_items. Every row holds at least one item so
/// no line is blank.
inline Rows random_rows(std::mt19937_64& gen, std::size_t n_rows, std::uint32_t n_items,
                        double density) {
  std::bernoulli_distribution bit(density);
  std::uniform_int_distribution<std::uint32_t> pick(1, n_items);
  Rows rows(n_rows);
  for (auto& row : rows) {
    for (std::uint32_t item = 1; item <= n_items; ++item) {
      if (bit(gen)) row.insert(item);
    }
    if (row.empty()) row.insert(pick(gen));
  }
  return rows;
}

/// Row-wise support of an itemset (original item ids).
inline std::size_t brute_support(const Rows& rows, const std::vector<std::uint32_t>& itemset) {
  std::size_t n = 0;
  for (const auto& row : rows) {
    if (std::all_of(itemset.begin(), itemset.end(), [&](auto i) { return row.contains(i); })) ++n;
  }
  return n;
}

/// Supports of all 2^k itemsets over the distinct items present, by subset
/// bitmask over the sorted item list.
inline std::vector<std::size_t> all_subset_supports(const Rows& rows,
                                                    std::vector<std::uint32_t>* items_out = nullptr) {
  std::set<std::uint32_t> all;
  for (const auto& row : rows) all.insert(row.begin(), row.end());
  const std::vector<std::uint32_t> items(all.begin(), all.end());
  if (items_out) *items_out = items;
  std::vector<std::size_t> supports(std::size_t{1} << items.size());
  for (std::size_t mask = 0; mask < supports.size(); ++mask) {
    std::vector<std::uint32_t> itemset;
    for (std::size_t b = 0; b < items.size(); ++b) {
      if (mask >> b & 1) itemset.push_back(items[b]);
    }
    supports[mask] = brute_support(rows, itemset);
  }
  return supports;
}

/// Number of itemsets (empty set included) with support >= sigma.
inline std::uint64_t brute_count(const Rows& rows, std::size_t sigma) {
  std::uint64_t n = 0;
  for (auto s : all_subset_supports(rows)) n += s >= sigma;
  return n;
}

/// Exact expectation of the lattice path estimate at sigma: walks every
/// possible path, weighting each by the product of 1/d_i. Works on subset
/// bitmasks so it never touches the core sampler.
inline double exhaustive_path_expectation(const Rows& rows, std::size_t sigma) {
  const auto supports = all_subset_supports(rows);
  const std::size_t k = std::bit_width(supports.size()) - 1;
  double expectation = 0.0;
  std::function<void(std::size_t, double, double, std::size_t, double)> walk =
      [&](std::size_t mask, double prob, double product, std::size_t depth, double estimate) {
        std::vector<std::size_t> ext;
        for (std::size_t b = 0; b < k; ++b) {
          const std::size_t next = mask | (std::size_t{1} << b);
          if (!(mask >> b & 1) && supports[next] >= sigma) ext.push_back(next);
        }
        if (ext.empty()) {
          expectation += prob * estimate;
          return;
        }
        const double d = static_cast<double>(ext.size());
        // product / depth! folded in incrementally: level depth+1 term.
        const double next_product = product * d / static_cast<double>(depth + 1);
        for (auto next : ext) walk(next, prob / d, next_product, depth + 1, estimate + next_product);
      };
  walk(0, 1.0, 1.0, 0, 1.0);
  return expectation;
}

/// Maximum depth over all paths at sigma.
inline std::size_t exhaustive_max_depth(const Rows& rows, std::size_t sigma) {
  const auto supports = all_subset_supports(rows);
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < supports.size(); ++mask) {
    if (supports[mask] >= sigma) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

inline double weighted_sse(const std::vector<WeightedPoint>& pts, const std::vector<double>& fit) {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s += pts[i].w * (pts[i].y - fit[i]) * (pts[i].y - fit[i]);
  }
  return s;
}

/// Best non-increasing fit by trying every ordered partition into contiguous
/// blocks, each fitted by its weighted mean.
inline std::vector<double> block_partition_fit(const std::vector<WeightedPoint>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> best_fit;
  double best = std::numeric_limits<double>::infinity();
  // Bit i of `cuts` set means a block boundary after point i.
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<double> fit(n);
    std::size_t start = 0;
    double prev_level = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (i == n - 1 || (cuts >> i & 1)) {
        double sw = 0.0, swy = 0.0;
        for (std::size_t j = start; j <= i; ++j) {
          sw += pts[j].w;
          swy += pts[j].w * pts[j].y;
        }
        const double level = swy / sw;
        if (level > prev_level) ok = false;
        for (std::size_t j = start; j <= i; ++j) fit[j] = level;
        prev_level = level;
        start = i + 1;
      }
    }
    if (!ok) continue;
    const double sse = weighted_sse(pts, fit);
    if (sse < best) {
      best = sse;
      best_fit = fit;
    }
  }
  return best_fit;
}

/// Textbook non-decreasing PAVA (repeated adjacent pooling until no
/// violation remains). Deliberately naive.
inline std::vector<double> naive_pava_increasing(const std::vector<WeightedPoint>& pts) {
  struct Block {
    double sum;
    double weight;
    std::size_t len;
  };
  std::vector<Block> blocks;
  for (const auto& p : pts) blocks.push_back({p.w * p.y, p.w, 1});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      if (blocks[i].sum / blocks[i].weight > blocks[i + 1].sum / blocks[i + 1].weight) {
        blocks[i].sum += blocks[i + 1].sum;
        blocks[i].weight += blocks[i + 1].weight;
        blocks[i].len += blocks[i + 1].len;
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  std::vector<double> fit;
  for (const auto& b : blocks) fit.insert(fit.end(), b.len, b.sum / b.weight);
  return fit;
}

/// Random strictly ascending x with random y and weights.
inline std::vector<WeightedPoint> random_points(std::mt19937_64& gen, std::size_t n,
                                                bool unit_weights = false) {
  std::uniform_real_distribution<double> y(-100.0, 100.0);
  std::uniform_real_distribution<double> w(0.1, 5.0);
  std::uniform_int_distribution<int> step(1, 4);
  std::vector<WeightedPoint> pts;
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x += step(gen);
    pts.push_back({x, y(gen), unit_weights ? 1.0 : w(gen)});
  }
  return pts;
}

/// Two identical columns covering rows 0..3 of 8. Rows 4..7 are empty, which
/// FIMI text cannot express (blank lines are skipped), so the database is
/// built directly.
inline TransactionDatabase correlated_pair_db() {
  BitVector a(8), b(8);
  for (std::size_t r = 0; r < 4; ++r) {
    a.set(r);
    b.set(r);
  }
  return TransactionDatabase(8, {a, b}, {1, 2});
}

}  // namespace freqspec::testing
