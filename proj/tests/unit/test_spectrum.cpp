#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "freqspec/exact.hpp"
#include "freqspec/spectrum.hpp"
#include "oracles.hpp"

namespace freqspec {
namespace {

SpectrumQuery query(std::size_t lo, std::size_t hi, std::size_t n, std::uint64_t seed = 0) {
  SpectrumQuery q;
  q.sigma_min = lo;
  q.sigma_max = hi;
  q.n_paths = n;
  q.master_seed = seed;
  return q;
}

TEST(SpectrumQuery, Validation) {
  EXPECT_NO_THROW(query(1, 1, 1).validate());
  EXPECT_THROW(query(0, 5, 1).validate(), std::invalid_argument);
  EXPECT_THROW(query(6, 5, 1).validate(), std::invalid_argument);
  EXPECT_THROW(query(1, 5, 0).validate(), std::invalid_argument);
}

TEST(EstimateSpectrum, RejectsThresholdAboveRowCount) {
  const auto db = parse_fimi_text("1\n2\n");
  EXPECT_THROW((void)estimate_spectrum(db, query(1, 3, 10)), std::invalid_argument);
  EXPECT_THROW((void)estimate_spectrum(db, query(1, 2, 0)), std::invalid_argument);
}

TEST(EstimateSpectrum, CorrelatedPairIsConstantFour) {
  const auto db = testing::correlated_pair_db();
  for (std::uint64_t seed : {0u, 1u, 12345u}) {
    const auto r = estimate_spectrum(db, query(2, 2, 100, seed));
    ASSERT_EQ(r.points.size(), 100u);
    for (const auto& p : r.points) {
      EXPECT_EQ(p.sigma, 2u);
      EXPECT_EQ(p.estimate, 4.0);
    }
    EXPECT_EQ(r.curve.breakpoints, std::vector<double>{2.0});
    EXPECT_EQ(r.curve.levels, std::vector<double>{4.0});
  }
}

TEST(EstimateSpectrum, SingleThresholdGivesOneBreakpoint) {
  std::mt19937_64 gen(1);
  const auto db = parse_fimi_text(testing::rows_to_fimi(testing::random_rows(gen, 40, 10, 0.4)));
  const auto r = estimate_spectrum(db, query(7, 7, 300));
  EXPECT_EQ(r.curve.size(), 1u);
  EXPECT_EQ(r.curve.breakpoints.front(), 7.0);
}

TEST(EstimateSpectrum, PointsCurveAndDeterminism) {
  std::mt19937_64 gen(2);
  const auto db = parse_fimi_text(testing::rows_to_fimi(testing::random_rows(gen, 64, 12, 0.5)));
  const auto q = query(3, 40, 2000, 77);
  const auto a = estimate_spectrum(db, q, {1});
  const auto b = estimate_spectrum(db, q, {4});
  const auto c = estimate_spectrum(db, q, {0});
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.points, c.points);
  EXPECT_EQ(a.curve, b.curve);
  EXPECT_EQ(a.dataset, (DatasetSummary{64, db.n_attrs()}));
  EXPECT_EQ(a.query, q);
  for (const auto& p : a.points) {
    EXPECT_GE(p.sigma, q.sigma_min);
    EXPECT_LE(p.sigma, q.sigma_max);
    EXPECT_GE(p.estimate, 1.0);
  }
  for (std::size_t i = 1; i < a.curve.size(); ++i) {
    EXPECT_LT(a.curve.breakpoints[i - 1], a.curve.breakpoints[i]);
    EXPECT_LE(a.curve.levels[i], a.curve.levels[i - 1]);
  }
  for (double x : a.curve.breakpoints) {
    EXPECT_TRUE(std::any_of(a.points.begin(), a.points.end(),
                            [&](const EstimatePoint& p) { return p.sigma == x; }));
  }
  const auto other = estimate_spectrum(db, query(3, 40, 2000, 78));
  EXPECT_NE(other.points, a.points);
}

TEST(EstimateSpectrum, ChunkedSamplingMatchesOneShot) {
  std::mt19937_64 gen(3);
  const auto db = parse_fimi_text(testing::rows_to_fimi(testing::random_rows(gen, 50, 10, 0.5)));
  const auto q = query(1, 50, 555, 4);
  const auto whole = estimate_spectrum(db, q);
  std::vector<EstimatePoint> pieces(q.n_paths);
  for (std::size_t done = 0; done < q.n_paths; done += 100) {
    const std::size_t n = std::min<std::size_t>(100, q.n_paths - done);
    sample_points(db, q, done + 1, std::span(pieces).subspan(done, n), {3});
  }
  EXPECT_EQ(pieces, whole.points);
  EXPECT_EQ(sample_point(db, q, 17), whole.points[16]);
}

TEST(EstimateSpectrum, ExcludingEmptySetSubtractsOne) {
  std::mt19937_64 gen(4);
  const auto db = parse_fimi_text(testing::rows_to_fimi(testing::random_rows(gen, 30, 8, 0.4)));
  auto q = query(1, 30, 300, 5);
  const auto with = estimate_spectrum(db, q);
  q.include_empty_set = false;
  const auto without = estimate_spectrum(db, q);
  for (std::size_t i = 0; i < with.points.size(); ++i) {
    EXPECT_EQ(without.points[i].sigma, with.points[i].sigma);
    EXPECT_EQ(without.points[i].estimate, std::max(with.points[i].estimate - 1.0, 0.0));
  }
}

TEST(EstimateSpectrum, LogFitIsMonotoneAndMapsBack) {
  const std::vector<EstimatePoint> pts{{1, 999}, {2, 9}, {3, 99}};
  const auto lin = fit_spectrum(pts, FitSpace::linear);
  const auto log = fit_spectrum(pts, FitSpace::log10);
  EXPECT_EQ(lin.levels, (std::vector<double>{999, 54, 54}));
  EXPECT_DOUBLE_EQ(log.levels[0], 999);
  EXPECT_NEAR(log.levels[1], std::pow(10.0, 1.5) - 1, 1e-9);
  EXPECT_EQ(log.levels[1], log.levels[2]);
  EXPECT_EQ(fit_space_from_string("log10"), FitSpace::log10);
  EXPECT_EQ(to_string(FitSpace::linear), "linear");
  EXPECT_THROW((void)fit_space_from_string("cubic"), std::invalid_argument);
}

TEST(EstimateSpectrum, MeanEstimateAgreesWithExactCount) {
  // 50,000 paths at a fixed threshold: the sample mean must sit within three
  // standard errors of the exact count.
  std::mt19937_64 gen(555);
  struct Case {
    std::size_t rows;
    std::uint32_t items;
    double density;
  };
  for (const Case& c : {Case{64, 12, 0.5}, Case{40, 10, 0.6}, Case{64, 12, 0.35}}) {
    const auto db =
        parse_fimi_text(testing::rows_to_fimi(testing::random_rows(gen, c.rows, c.items, c.density)));
    for (std::size_t sigma : {std::size_t{3}, c.rows / 4, c.rows / 2}) {
      const auto q = query(sigma, sigma, 50'000, sigma);
      std::vector<EstimatePoint> pts(q.n_paths);
      sample_points(db, q, 1, pts);
      double mean = 0, m2 = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = pts[i].estimate - mean;
        mean += d / static_cast<double>(i + 1);
        m2 += d * (pts[i].estimate - mean);
      }
      const double se = std::sqrt(m2 / static_cast<double>(pts.size() - 1) / pts.size());
      const double exact = static_cast<double>(exact_spectrum(db, sigma).count_at(sigma));
      EXPECT_LE(std::abs(mean - exact), 3 * se + 1e-9)
          << "rows=" << c.rows << " sigma=" << sigma << " mean=" << mean << " exact=" << exact;
    }
  }
}

}  // namespace
}  // namespace freqspec
