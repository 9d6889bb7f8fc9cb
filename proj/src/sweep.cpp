#include <bicheb/sweep.hpp>

#include <bicheb/errors.hpp>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bicheb {

namespace {

double parse_double(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

nlohmann::json bound_to_json(Bound b) {
  if (b.is_unbounded()) return "unbounded";
  return round_to_printed(b.value);
}

Bound bound_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "unbounded") throw UsageError("unexpected bound literal in JSON");
    return Bound::unbounded();
  }
  return Bound{j.get<double>()};
}

}  // namespace

Range Range::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(':', pos);
    parts.push_back(trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (parts.size() == 1) return single(parse_double(parts[0]));
  if (parts.size() != 3) throw UsageError("range must be 'value' or 'start:stop:count'");
  Range r{parse_double(parts[0]), parse_double(parts[1]), 0};
  int count = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 1) {
    throw UsageError("range count must be a positive integer");
  }
  r.count = count;
  return r;
}

std::vector<double> Range::values() const {
  if (count < 1) throw UsageError("range count must be positive");
  std::vector<double> v(static_cast<std::size_t>(count));
  if (count == 1) {
    v[0] = start;
    return v;
  }
  const double step = (stop - start) / double(count - 1);
  for (int i = 0; i < count; ++i) v[std::size_t(i)] = start + double(i) * step;
  v.back() = stop;
  return v;
}

std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  return std::nullopt;
}

std::vector<ClassParams> make_grid(const SweepSpec& spec) {
  std::vector<ClassParams> grid;
  for (double lam : spec.lambda.values()) {
    for (double mu : spec.mu.values()) {
      for (double delta : spec.delta.values()) {
        for (double t : spec.t.values()) grid.emplace_back(lam, mu, delta, t);
      }
    }
  }
  return grid;
}

SweepRow make_row(const ClassParams& p, std::span<const double> etas, MVariant variant) {
  const BoundReport b = coefficient_bounds(p);
  SweepRow row;
  row.lambda = p.lambda();
  row.mu = p.mu();
  row.delta = p.delta();
  row.t = p.t();
  row.xi = p.xi();
  row.a2_bound = b.a2_bound;
  row.a3_bound = b.a3_bound;
  for (double eta : etas) row.fs_bounds.push_back(fekete_szego_bound(p, eta, variant).bound);
  row.denom = b.denom;
  row.singular = b.singular;
  return row;
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_to_printed(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

SweepRow round_to_printed(const SweepRow& row) {
  SweepRow r = row;
  for (double* v : {&r.lambda, &r.mu, &r.delta, &r.t, &r.xi, &r.a3_bound, &r.denom}) *v = round_to_printed(*v);
  r.a2_bound.value = round_to_printed(r.a2_bound.value);
  for (Bound& b : r.fs_bounds) b.value = round_to_printed(b.value);
  return r;
}

std::vector<std::string> column_names(std::span<const double> etas) {
  std::vector<std::string> cols = {"lambda", "mu", "delta", "t", "xi", "a2_bound", "a3_bound"};
  for (double eta : etas) cols.push_back("fs_bound@" + format_number(eta));
  cols.push_back("denom");
  cols.push_back("singular_flag");
  return cols;
}

std::string to_csv(std::span<const SweepRow> rows, std::span<const double> etas) {
  std::ostringstream os;
  const auto cols = column_names(etas);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const SweepRow& r : rows) {
    os << format_number(r.lambda) << ',' << format_number(r.mu) << ',' << format_number(r.delta) << ','
       << format_number(r.t) << ',' << format_number(r.xi) << ',' << format_number(r.a2_bound.value) << ','
       << format_number(r.a3_bound);
    for (const Bound& b : r.fs_bounds) os << ',' << format_number(b.value);
    os << ',' << format_number(r.denom) << ',' << (r.singular ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string to_json(std::span<const SweepRow> rows, std::span<const double> etas) {
  const auto cols = column_names(etas);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    if (r.fs_bounds.size() != etas.size()) throw UsageError("row does not match the eta list");
    nlohmann::ordered_json j;
    j["lambda"] = round_to_printed(r.lambda);
    j["mu"] = round_to_printed(r.mu);
    j["delta"] = round_to_printed(r.delta);
    j["t"] = round_to_printed(r.t);
    j["xi"] = round_to_printed(r.xi);
    j["a2_bound"] = bound_to_json(r.a2_bound);
    j["a3_bound"] = round_to_printed(r.a3_bound);
    for (std::size_t k = 0; k < etas.size(); ++k) j[cols[7 + k]] = bound_to_json(r.fs_bounds[k]);
    j["denom"] = round_to_printed(r.denom);
    j["singular_flag"] = r.singular;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::vector<SweepRow> rows_from_json(std::string_view text, std::span<const double> etas) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid sweep JSON: ") + e.what());
  }
  if (!doc.is_array()) throw UsageError("sweep JSON must be an array of rows");
  const auto cols = column_names(etas);
  std::vector<SweepRow> rows;
  for (const auto& j : doc) {
    SweepRow r;
    r.lambda = j.at("lambda").get<double>();
    r.mu = j.at("mu").get<double>();
    r.delta = j.at("delta").get<double>();
    r.t = j.at("t").get<double>();
    r.xi = j.at("xi").get<double>();
    r.a2_bound = bound_from_json(j.at("a2_bound"));
    r.a3_bound = j.at("a3_bound").get<double>();
    for (std::size_t k = 0; k < etas.size(); ++k) r.fs_bounds.push_back(bound_from_json(j.at(cols[7 + k])));
    r.denom = j.at("denom").get<double>();
    r.singular = j.at("singular_flag").get<bool>();
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(',', pos);
    out.push_back(parse_double(trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos))));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace bicheb
