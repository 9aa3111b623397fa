#pragma once

#include <iosfwd>
#include <vector>

namespace hyplat {

struct SweepRow {
  double k = 0.0;
  double two_omega = 0.0;
  double a_native = 0.0;
  double a_normalized = 0.0;
  double a_normalized_x2 = 0.0;
};

/// `points` values of k spaced uniformly in ln k over [k_min, k_max],
/// evaluated on up to `threads` workers (0: hardware concurrency) and
/// returned in increasing k.
std::vector<SweepRow> sweep(double k_min, double k_max, int points, double tol = 1e-10,
                            unsigned threads = 0);

inline constexpr const char* kSweepHeader = "k,two_omega,a_native,a_normalized,a_normalized_x2";

/// Header line then one row per entry, 12 significant digits, LF endings.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Inverse of write_csv; throws std::runtime_error on a malformed file.
std::vector<SweepRow> read_csv(std::istream& in);

/// Same formatting as one CSV field.
std::vector<SweepRow> rounded(const std::vector<SweepRow>& rows);

struct MaximumReport {
  double k = 0.0;
  double two_omega = 0.0;
  double a_normalized = 0.0;
  double a_normalized_x2 = 0.0;
  /// |a_norm(k) - a_norm(1/k)| at the located k.
  double symmetry_residual = 0.0;
  int evaluations = 0;
};

/// Golden-section search over s = ln k in [-3, 3] for the maximum of the
/// unit-diagonal normalized value. Throws BracketNotFound if the best point
/// does not beat both window ends.
MaximumReport locate_maximum(double tol = 1e-10);

}  // namespace hyplat
