#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace erdos {

struct CurveSample {
  double x = 0;
  double value = 0;
};

struct ScalarMinimum {
  double x = 0;
  double value = 0;
  bool interior = false;  // strictly inside the search range
};

// Raised when the pre-scan grid is not V-shaped; carries the sampled
// curve so the caller can dump it.
class non_unimodal_error : public std::runtime_error {
 public:
  non_unimodal_error(std::string what, std::vector<CurveSample> s)
      : std::runtime_error(std::move(what)), samples(std::move(s)) {}
  std::vector<CurveSample> samples;
};

// Golden-section minimization to |interval| < tol, after a grid
// pre-scan that checks the observed samples decrease to a single valley
// and rise after it. Unimodality is observed, not assumed silently.
template <typename F>
ScalarMinimum golden_section_min(F&& f, double lo, double hi,
                                 double tol = 1e-2, int prescan = 13) {
  if (!(lo <= hi)) throw std::domain_error("golden_section_min: empty range");
  if (lo == hi) return {lo, f(lo), false};

  std::vector<CurveSample> samples;
  samples.reserve(prescan);
  std::size_t best = 0;
  for (int i = 0; i < prescan; ++i) {
    const double x = lo + (hi - lo) * i / (prescan - 1);
    samples.push_back({x, f(x)});
    if (samples[i].value < samples[best].value) best = i;
  }
  const double slack =
      1e-9 * (std::abs(samples[best].value) + 1.0);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const bool ok = i < best ? samples[i + 1].value <= samples[i].value + slack
                             : samples[i + 1].value >= samples[i].value - slack;
    if (!ok) {
      throw non_unimodal_error(
          "golden_section_min: sampled curve is not unimodal near x = " +
              std::to_string(samples[i].x),
          samples);
    }
  }

  double a = samples[best > 0 ? best - 1 : 0].x;
  double b = samples[best + 1 < samples.size() ? best + 1 : best].x;
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - (b - a) * kInvPhi;
  double d = a + (b - a) * kInvPhi;
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * kInvPhi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * kInvPhi;
      fd = f(d);
    }
  }
  ScalarMinimum m;
  m.x = (a + b) / 2;
  m.value = f(m.x);
  m.interior = (m.x > lo + tol) && (m.x < hi - tol);
  return m;
}

}  // namespace erdos
