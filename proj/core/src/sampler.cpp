#include "freqspec/sampler.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace freqspec {

double path_estimate_tree(std::span<const std::uint32_t> branching) {
  double total = 1.0;
  double product = 1.0;
  for (std::uint32_t d : branching) {
    product *= static_cast<double>(d);
    total += product;
  }
  return total;
}

double path_estimate_lattice(std::span<const std::uint32_t> branching) {
  double total = 1.0;
  double term = 1.0;  // d_0 * ... * d_{j-1} / j!
  for (std::size_t j = 0; j < branching.size(); ++j) {
    term *= static_cast<double>(branching[j]) / static_cast<double>(j + 1);
    total += term;
  }
  return total;
}

namespace {

using Word = BitVector::Word;

void check_sigma(const TransactionDatabase& db, std::size_t sigma) {
  if (sigma < 1 || sigma > db.n_rows()) {
    throw std::invalid_argument("sigma " + std::to_string(sigma) + " outside [1, " +
                                std::to_string(db.n_rows()) + "]");
  }
}

// Support mask of the current itemset. Only words in [lo, hi) can be
// non-zero, which lets the candidate scan skip the dead prefix and suffix.
class WorkingMask {
 public:
  explicit WorkingMask(const TransactionDatabase& db) {
    const BitVector all = db.all_rows();
    words_.assign(all.words().begin(), all.words().end());
    hi_ = words_.size();
  }

  bool reaches(const BitVector& column, std::size_t sigma) const {
    const std::span<const Word> col = column.words();
    std::size_t count = 0;
    for (std::size_t i = lo_; i < hi_; ++i) {
      count += static_cast<std::size_t>(std::popcount(words_[i] & col[i]));
      if (count >= sigma) return true;
    }
    return false;
  }

  void intersect(const BitVector& column) {
    const std::span<const Word> col = column.words();
    for (std::size_t i = lo_; i < hi_; ++i) words_[i] &= col[i];
    while (lo_ < hi_ && words_[lo_] == 0) ++lo_;
    while (hi_ > lo_ && words_[hi_ - 1] == 0) --hi_;
  }

 private:
  std::vector<Word> words_;
  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
};

}  // namespace

std::vector<ColumnIndex> frequent_extensions(const TransactionDatabase& db, const BitVector& mask,
                                             std::span<const ColumnIndex> candidates,
                                             std::size_t sigma) {
  std::vector<ColumnIndex> out;
  for (ColumnIndex c : candidates) {
    if (support_of_intersection(db, mask, c) >= sigma) out.push_back(c);
  }
  return out;
}

PathSample sample_path(const TransactionDatabase& db, std::size_t sigma, PathRng& rng) {
  check_sigma(db, sigma);

  PathSample path;
  path.sigma = sigma;

  WorkingMask mask(db);
  std::vector<ColumnIndex> candidates(db.n_attrs());
  std::iota(candidates.begin(), candidates.end(), ColumnIndex{0});
  std::vector<ColumnIndex> extensions;
  extensions.reserve(candidates.size());

  const std::span<const BitVector> columns = db.columns();
  for (;;) {
    extensions.clear();
    for (ColumnIndex c : candidates) {
      if (mask.reaches(columns[c], sigma)) extensions.push_back(c);
    }
    if (extensions.empty()) break;

    const auto pick = static_cast<std::size_t>(rng.uniform_below(extensions.size()));
    const ColumnIndex item = extensions[pick];
    path.branching.push_back(static_cast<std::uint32_t>(extensions.size()));
    path.items.push_back(item);
    mask.intersect(columns[item]);

    // Support is anti-monotone: anything infrequent now stays infrequent
    // under the smaller mask, so only surviving extensions remain candidates.
    extensions.erase(extensions.begin() + static_cast<std::ptrdiff_t>(pick));
    candidates.swap(extensions);
  }

  path.estimate = path_estimate_lattice(path.branching);
  return path;
}

std::vector<std::uint32_t> replay_branching(const TransactionDatabase& db, std::size_t sigma,
                                            std::span<const ColumnIndex> items) {
  check_sigma(db, sigma);
  std::vector<std::uint32_t> branching;
  BitVector mask = db.all_rows();
  std::vector<ColumnIndex> remaining(db.n_attrs());
  std::iota(remaining.begin(), remaining.end(), ColumnIndex{0});
  for (ColumnIndex item : items) {
    const auto ext = frequent_extensions(db, mask, remaining, sigma);
    if (std::find(ext.begin(), ext.end(), item) == ext.end()) {
      throw std::invalid_argument("replay_branching: attribute " + std::to_string(item) +
                                  " is not a frequent extension at depth " +
                                  std::to_string(branching.size()));
    }
    branching.push_back(static_cast<std::uint32_t>(ext.size()));
    mask &= db.column(item);
    std::erase(remaining, item);
  }
  return branching;
}

}  // namespace freqspec
