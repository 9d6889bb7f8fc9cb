#ifndef BICHEB_SWEEP_HPP
#define BICHEB_SWEEP_HPP

// Parameter grids and the tabular output of bound sweeps.

#include <bicheb/bounds.hpp>
#include <bicheb/classop.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicheb {

// `count` evenly spaced values from start to stop inclusive.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  static Range single(double v) { return {v, v, 1}; }
  // "v" or "start:stop:count".
  static Range parse(std::string_view text);
  std::vector<double> values() const;
};

enum class OutputFormat { kCsv, kJson };

std::optional<OutputFormat> parse_format(std::string_view s);

struct SweepSpec {
  Range lambda = Range::single(1.0);
  Range mu = Range::single(1.0);
  Range delta = Range::single(0.0);
  Range t = Range::single(0.6);
  std::vector<double> etas;
  MVariant variant = MVariant::kCorrected;
};

// Lexicographic in the (lambda, mu, delta, t) range indices, t fastest.
// Throws UsageError on the first point that violates a class constraint.
std::vector<ClassParams> make_grid(const SweepSpec& spec);

struct SweepRow {
  double lambda = 0.0;
  double mu = 0.0;
  double delta = 0.0;
  double t = 0.0;
  double xi = 0.0;
  Bound a2_bound;
  double a3_bound = 0.0;
  std::vector<Bound> fs_bounds;  // one per eta, in eta order
  double denom = 0.0;
  bool singular = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

SweepRow make_row(const ClassParams& p, std::span<const double> etas, MVariant variant);

// 12 significant digits; "inf" for infinity.
std::string format_number(double x);
// x rounded to what format_number prints.
double round_to_printed(double x);
SweepRow round_to_printed(const SweepRow& row);

std::vector<std::string> column_names(std::span<const double> etas);

std::string to_csv(std::span<const SweepRow> rows, std::span<const double> etas);
std::string to_json(std::span<const SweepRow> rows, std::span<const double> etas);
// Inverse of to_json up to the printed precision.
std::vector<SweepRow> rows_from_json(std::string_view text, std::span<const double> etas);

std::vector<double> parse_number_list(std::string_view text);

}  // namespace bicheb

#endif  // BICHEB_SWEEP_HPP
