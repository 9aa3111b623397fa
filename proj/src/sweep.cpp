#include "hyplat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "hyplat/accessory.hpp"
#include "hyplat/errors.hpp"

namespace hyplat {

namespace {

SweepRow make_row(double k, double a_native) {
  const NormalizedValue n = normalize(k, a_native);
  return SweepRow{k, n.two_omega, a_native, n.a_norm, 2.0 * n.a_norm};
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::stod(format12(x)); }

}  // namespace

std::vector<SweepRow> sweep(double k_min, double k_max, int points, double tol, unsigned threads) {
  if (!(k_min >= kMinAspect && k_min < k_max && k_max <= kMaxAspect) || points < 2) {
    throw std::invalid_argument("sweep requires 0.02 <= k_min < k_max <= 50 and points >= 2");
  }
  const double log_min = std::log(k_min);
  const double log_step = (std::log(k_max) - log_min) / (points - 1);
  std::vector<double> ks(points);
  for (int i = 0; i < points; ++i) ks[i] = std::exp(log_min + log_step * i);
  ks.front() = k_min;
  ks.back() = k_max;

  std::vector<SweepRow> rows(points);
  std::vector<std::exception_ptr> failures(points);
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int i = next++; i < points; i = next++) {
      try {
        rows[i] = make_row(ks[i], a_of_k(ks[i], tol));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(points));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format12(r.k) << ',' << format12(r.two_omega) << ',' << format12(r.a_native) << ','
        << format12(r.a_normalized) << ',' << format12(r.a_normalized_x2) << '\n';
  }
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw std::runtime_error("sweep CSV: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell;
    double v[5];
    for (int i = 0; i < 5; ++i) {
      if (!std::getline(fields, cell, ',')) throw std::runtime_error("sweep CSV: short row: " + line);
      std::size_t used = 0;
      v[i] = std::stod(cell, &used);
      if (used != cell.size()) throw std::runtime_error("sweep CSV: bad number: " + cell);
    }
    if (std::getline(fields, cell, ',')) throw std::runtime_error("sweep CSV: long row: " + line);
    rows.push_back(SweepRow{v[0], v[1], v[2], v[3], v[4]});
  }
  return rows;
}

std::vector<SweepRow> rounded(const std::vector<SweepRow>& rows) {
  std::vector<SweepRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    out.push_back(SweepRow{round12(r.k), round12(r.two_omega), round12(r.a_native),
                           round12(r.a_normalized), round12(r.a_normalized_x2)});
  }
  return out;
}

MaximumReport locate_maximum(double tol) {
  constexpr double kWindow = 3.0;
  constexpr double kTolerance = 1e-5;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  MaximumReport rep;
  const auto value = [&](double s) {
    ++rep.evaluations;
    return a_normalized(std::exp(s), tol).a_norm;
  };

  double lo = -kWindow, hi = kWindow;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = value(x1), f2 = value(x2);
  while (hi - lo > kTolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = value(x1);
    }
  }
  const double s_best = f1 >= f2 ? x1 : x2;
  const double f_best = std::max(f1, f2);
  if (!(f_best > value(-kWindow) && f_best > value(kWindow))) {
    throw BracketNotFound("golden-section search did not bracket an interior maximum");
  }

  rep.k = std::exp(s_best);
  const NormalizedValue at_best{rep.k / std::sqrt(1.0 + rep.k * rep.k), f_best};
  rep.two_omega = at_best.two_omega;
  rep.a_normalized = at_best.a_norm;
  rep.a_normalized_x2 = 2.0 * at_best.a_norm;
  rep.symmetry_residual = std::abs(at_best.a_norm - value(-s_best));
  return rep;
}

}  // namespace hyplat
