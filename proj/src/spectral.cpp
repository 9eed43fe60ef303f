#include "liyorke/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "liyorke/orbit.hpp"
#include "liyorke/parallel.hpp"

namespace liyorke {

namespace {

bool power_of_two(int k) { return k >= 1 && (k & (k - 1)) == 0; }

int cell_of(const Point& p, int k) {
  int c = int(p.coord * k);
  if (c >= k) c = k - 1;
  return p.label * k + c;
}

}  // namespace

CorrelationReport weak_mixing_score(const System& sys, int k,
                                    std::int64_t horizon, std::int64_t samples,
                                    std::uint64_t seed, int threads) {
  if (!power_of_two(k) || k < 2)
    throw std::invalid_argument("partition size must be a power of two >= 2");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  const int cells = k * sys.component_count();
  CorrelationReport report;
  report.partition = k;
  report.cells = cells;
  report.horizon = horizon;
  report.samples = samples;
  report.pair_means.assign(std::size_t(cells) * cells, 0.0);

  // per-n terms, filled independently
  std::vector<std::vector<double>> terms{std::size_t(horizon)};
  parallel_for(horizon, threads, [&](std::int64_t n) {
    RngStream rng(seed, stream_id(stream_tag::kSpectral, std::uint64_t(n)));
    std::vector<std::int64_t> joint(std::size_t(cells) * cells, 0);
    for (std::int64_t s = 0; s < samples; ++s) {
      Point x = sample_point(sys, rng);
      int j = cell_of(x, k);
      OrbitWalker w(sys, x);
      w.advance(std::uint64_t(n));
      int i = cell_of(w.current(), k);
      ++joint[std::size_t(i) * cells + j];
    }
    std::vector<double> row(cells, 0.0), col(cells, 0.0);
    for (int i = 0; i < cells; ++i)
      for (int j = 0; j < cells; ++j) {
        double p = double(joint[std::size_t(i) * cells + j]) / double(samples);
        row[i] += p;
        col[j] += p;
      }
    auto& t = terms[std::size_t(n)];
    t.assign(std::size_t(cells) * cells, 0.0);
    for (int i = 0; i < cells; ++i)
      for (int j = 0; j < cells; ++j) {
        double p = double(joint[std::size_t(i) * cells + j]) / double(samples);
        t[std::size_t(i) * cells + j] = std::fabs(p - row[i] * col[j]);
      }
  });

  for (const auto& t : terms)
    for (std::size_t c = 0; c < report.pair_means.size(); ++c)
      report.pair_means[c] += t[c];
  for (double& v : report.pair_means) v /= double(horizon);

  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j) {
      double v = report.pair_means[std::size_t(i) * cells + j];
      if (v > report.score) {
        report.score = v;
        report.argmax_i = i;
        report.argmax_j = j;
      }
    }
  return report;
}

bool classify_weak_mixing(const CorrelationReport& report, double threshold) {
  if (!(threshold > 0.0))
    throw std::invalid_argument("threshold must be positive");
  return report.score < threshold;
}

double doubling_joint_exact(int k, int i, int j, std::int64_t n) {
  if (!power_of_two(k) || i < 0 || i >= k || j < 0 || j >= k)
    throw std::invalid_argument("bad dyadic cell");
  // T^-n I_i is 2^n translates of an interval of width 1/(k 2^n), one per
  // block of width 2^-n; once 2^n >= k every I_j holds an integral number of
  // full periods and the joint measure factorizes exactly.
  if (n >= 63 || (std::int64_t(1) << n) >= k)
    return (1.0 / k) * (1.0 / k);
  std::int64_t period = std::int64_t(1) << n;  // 2^n < k
  // unit = 1/(k * 2^n); piece t occupies [t*k + i, t*k + i + 1) units,
  // I_j spans [j*2^n, (j+1)*2^n) units
  std::int64_t count = 0;
  for (std::int64_t t = 0; t < period; ++t) {
    std::int64_t u = t * k + i;
    if (u >= j * period && u < (j + 1) * period) ++count;
  }
  return double(count) / double(k * period);
}

double rotation_joint_exact(double alpha, int k, int i, int j, std::int64_t n) {
  if (i < 0 || i >= k || j < 0 || j >= k)
    throw std::invalid_argument("bad cell");
  // overlap of the arcs [i/k - n*alpha, i/k - n*alpha + 1/k) and
  // [j/k, (j+1)/k) on the circle
  double len = 1.0 / k;
  double shift = std::fmod(double(n) * alpha, 1.0);
  double a = double(i) / k - shift;
  a -= std::floor(a);
  double c = double(j) / k;
  double u = a - c;
  u -= std::floor(u);  // separation of left endpoints in [0,1)
  double overlap = 0.0;
  if (u < len) overlap += len - u;
  if (1.0 - u < len) overlap += len - (1.0 - u);
  return overlap;
}

double doubling_score_exact(int k, std::int64_t horizon) {
  double best = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      double sum = 0.0;
      for (std::int64_t n = 0; n < horizon; ++n)
        sum += std::fabs(doubling_joint_exact(k, i, j, n) - 1.0 / double(k) / double(k));
      double mean = sum / double(horizon);
      if (mean > best) best = mean;
    }
  return best;
}

double rotation_score_exact(double alpha, int k, std::int64_t horizon) {
  double best = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      double sum = 0.0;
      for (std::int64_t n = 0; n < horizon; ++n)
        sum += std::fabs(rotation_joint_exact(alpha, k, i, j, n) -
                         1.0 / double(k) / double(k));
      double mean = sum / double(horizon);
      if (mean > best) best = mean;
    }
  return best;
}

}  // namespace liyorke
