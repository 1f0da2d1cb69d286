#include "freqspec/exact.hpp"

#include <string>

namespace freqspec {

CapExceeded::CapExceeded(std::uint64_t cap)
    : std::runtime_error("exact enumeration exceeded the cap of " + std::to_string(cap) +
                         " itemsets; raise the cap or the minimum threshold"),
      cap_(cap) {}

ExactSpectrum::ExactSpectrum(std::size_t sigma_min, std::size_t n_rows, bool include_empty_set,
                             std::vector<std::uint64_t> histogram)
    : sigma_min_(sigma_min),
      n_rows_(n_rows),
      include_empty_set_(include_empty_set),
      histogram_(std::move(histogram)) {
  if (histogram_.size() != n_rows_ + 1) {
    throw std::invalid_argument("ExactSpectrum: histogram must have n_rows + 1 entries");
  }
  at_least_.assign(n_rows_ + 2, 0);
  for (std::size_t s = n_rows_ + 1; s-- > 0;) at_least_[s] = at_least_[s + 1] + histogram_[s];
}

std::uint64_t ExactSpectrum::count_at(std::size_t sigma) const {
  if (sigma < sigma_min_) {
    throw std::out_of_range("ExactSpectrum::count_at: sigma " + std::to_string(sigma) +
                            " below enumerated minimum " + std::to_string(sigma_min_));
  }
  if (sigma > n_rows_) return 0;
  return at_least_[sigma];
}

std::vector<std::pair<std::size_t, std::uint64_t>> ExactSpectrum::spectrum() const {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t s = sigma_min_; s <= n_rows_; ++s) out.emplace_back(s, at_least_[s]);
  return out;
}

SpectrumCurve ExactSpectrum::as_curve() const {
  SpectrumCurve curve;
  for (std::size_t s = sigma_min_; s <= n_rows_; ++s) {
    curve.breakpoints.push_back(static_cast<double>(s));
    curve.levels.push_back(static_cast<double>(at_least_[s]));
  }
  return curve;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t sigma_min, std::uint64_t cap, std::vector<std::uint64_t>& histogram)
      : sigma_min_(sigma_min), cap_(cap), histogram_(histogram) {}

  // `tail` holds the frequent one-item extensions of the current prefix
  // (ascending attribute index) together with their support masks.
  void expand(const std::vector<std::pair<ColumnIndex, BitVector>>& tail) {
    for (std::size_t i = 0; i < tail.size(); ++i) {
      const BitVector& mask = tail[i].second;
      record(mask.count());

      std::vector<std::pair<ColumnIndex, BitVector>> next;
      for (std::size_t j = i + 1; j < tail.size(); ++j) {
        if (intersection_count(mask, tail[j].second) >= sigma_min_) {
          next.emplace_back(tail[j].first, mask & tail[j].second);
        }
      }
      if (!next.empty()) expand(next);
    }
  }

  void record(std::size_t support) {
    if (++enumerated_ > cap_) throw CapExceeded(cap_);
    ++histogram_[support];
  }

 private:
  std::size_t sigma_min_;
  std::uint64_t cap_;
  std::vector<std::uint64_t>& histogram_;
  std::uint64_t enumerated_ = 0;
};

}  // namespace

ExactSpectrum exact_spectrum(const TransactionDatabase& db, std::size_t sigma_min,
                             std::uint64_t max_count, bool include_empty_set) {
  if (sigma_min < 1) throw std::invalid_argument("exact_spectrum: sigma_min must be >= 1");
  if (sigma_min > db.n_rows()) {
    throw std::invalid_argument("exact_spectrum: sigma_min (" + std::to_string(sigma_min) +
                                ") exceeds the number of rows (" + std::to_string(db.n_rows()) +
                                ")");
  }

  std::vector<std::uint64_t> histogram(db.n_rows() + 1, 0);
  Enumerator enumerator(sigma_min, max_count, histogram);
  if (include_empty_set) enumerator.record(db.n_rows());

  std::vector<std::pair<ColumnIndex, BitVector>> roots;
  for (std::size_t j = 0; j < db.n_attrs(); ++j) {
    if (db.columns()[j].count() >= sigma_min) {
      roots.emplace_back(static_cast<ColumnIndex>(j), db.columns()[j]);
    }
  }
  enumerator.expand(roots);
  return ExactSpectrum(sigma_min, db.n_rows(), include_empty_set, std::move(histogram));
}

}  // namespace freqspec
