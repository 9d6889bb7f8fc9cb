// bicheb: coefficient and Fekete-Szego bounds for the Chebyshev-subordinated
// bi-univalent class, with sweeps and brute-force verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation, 3 I/O.

#include <bicheb/bounds.hpp>
#include <bicheb/chebyshev.hpp>
#include <bicheb/classop.hpp>
#include <bicheb/errors.hpp>
#include <bicheb/oracle.hpp>
#include <bicheb/powerseries.hpp>
#include <bicheb/sweep.hpp>
#include <bicheb/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bicheb;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MVariant variant_from(const std::string& s) {
  if (auto v = parse_variant(s)) return *v;
  throw UsageError("variant must be 'corrected' or 'as-printed'");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string complex_text(Complex z) { return "(" + format_number(z.real()) + ", " + format_number(z.imag()) + ")"; }

Complex parse_complex(const std::string& text) {
  const auto parts = parse_number_list(text);
  if (parts.size() == 1) return {parts[0], 0.0};
  if (parts.size() == 2) return {parts[0], parts[1]};
  throw UsageError("coefficient must be 're' or 're,im'");
}

struct BoundArgs {
  double lambda = 1.0;
  double mu = 1.0;
  double delta = 0.0;
  double t = 0.6;
  std::optional<double> eta;
  std::string variant = "corrected";
};

int cmd_bound(const BoundArgs& a) {
  const ClassParams p(a.lambda, a.mu, a.delta, a.t);
  const MVariant variant = variant_from(a.variant);
  const BoundReport b = coefficient_bounds(p);
  std::ostringstream os;
  os << "lambda " << format_number(p.lambda()) << '\n'
     << "mu     " << format_number(p.mu()) << '\n'
     << "delta  " << format_number(p.delta()) << '\n'
     << "t      " << format_number(p.t()) << '\n'
     << "xi     " << format_number(p.xi()) << '\n'
     << "denom  " << format_number(b.denom) << (b.singular ? "  (singular)" : "") << '\n'
     << "a2 <= " << format_number(b.a2_bound.value) << (b.singular ? "  (unbounded)" : "") << '\n'
     << "a3 <= " << format_number(b.a3_bound) << '\n';
  if (a.eta) {
    const FeketeSzegoReport fs = fekete_szego_bound(p, *a.eta, variant);
    os << "fs(eta=" << format_number(*a.eta) << ") <= " << format_number(fs.bound.value) << "  branch "
       << to_string(fs.branch) << "  M " << format_number(fs.threshold_M) << "  h(eta) "
       << format_number(fs.h_eta) << "  variant " << to_string(fs.variant) << '\n';
  }
  std::cout << os.str();
  return kExitOk;
}

struct SweepArgs {
  std::string lambda = "1";
  std::string mu = "1";
  std::string delta = "0";
  std::string t = "0.6";
  std::string eta;
  std::string format = "csv";
  std::string output = "-";
  std::string variant = "corrected";
};

SweepSpec spec_from(const std::string& lambda, const std::string& mu, const std::string& delta,
                    const std::string& t, const std::string& eta, const std::string& variant) {
  SweepSpec spec;
  spec.lambda = Range::parse(lambda);
  spec.mu = Range::parse(mu);
  spec.delta = Range::parse(delta);
  spec.t = Range::parse(t);
  spec.etas = parse_number_list(eta);
  spec.variant = variant_from(variant);
  return spec;
}

int cmd_sweep(const SweepArgs& a) {
  const SweepSpec spec = spec_from(a.lambda, a.mu, a.delta, a.t, a.eta, a.variant);
  const auto format = parse_format(a.format);
  if (!format) throw UsageError("format must be 'csv' or 'json'");
  const std::vector<ClassParams> grid = make_grid(spec);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const ClassParams& p : grid) rows.push_back(make_row(p, spec.etas, spec.variant));
  write_output(a.output, *format == OutputFormat::kCsv ? to_csv(rows, spec.etas) : to_json(rows, spec.etas));
  return kExitOk;
}

struct VerifyArgs {
  std::string lambda;
  std::string mu;
  std::string delta;
  std::string t;
  std::optional<std::string> eta;
  long long samples = 10000;
  std::uint64_t seed = 42;
  std::string mode = "proof-set";
  bool refine = false;
  std::string variant = "corrected";
  std::string output = "-";
};

int cmd_verify(const VerifyArgs& a) {
  if (a.samples <= 0) throw UsageError("samples must be a positive integer");
  VerifyOptions opts = default_verify_options();
  const bool custom_grid = !a.lambda.empty() || !a.mu.empty() || !a.delta.empty() || !a.t.empty();
  if (custom_grid) {
    SweepSpec spec;
    spec.lambda = Range::parse(a.lambda.empty() ? "1:3:3" : a.lambda);
    spec.mu = Range::parse(a.mu.empty() ? "0:2:3" : a.mu);
    spec.delta = Range::parse(a.delta.empty() ? "0:1:3" : a.delta);
    spec.t = Range::parse(a.t.empty() ? "0.55:0.95:3" : a.t);
    opts.grid = make_grid(spec);
  }
  if (a.eta) opts.etas = parse_number_list(*a.eta);
  const auto mode = parse_mode(a.mode);
  if (!mode) throw UsageError("mode must be 'proof-set' or 'full-system'");
  opts.oracle.mode = *mode;
  opts.oracle.n_samples = std::uint64_t(a.samples);
  opts.oracle.seed = a.seed;
  opts.oracle.grid_refine = a.refine;
  opts.variant = variant_from(a.variant);

  const std::vector<SuiteResult> suites = run_verification(opts);
  write_output(a.output, render(suites));
  return all_passed(suites) ? kExitOk : kExitVerifyFailed;
}

int cmd_cheb(int n, double t) {
  if (n < 0) throw UsageError("n must be nonnegative");
  const Vector<double> rec = cheb_u_table(n, t);
  const Vector<double> gen = gen_fun_coeffs(t, n);
  std::ostringstream os;
  os << "n,U_n(t),genfun_coeff\n";
  for (int k = 0; k <= n; ++k) os << k << ',' << format_number(rec[k]) << ',' << format_number(gen[k]) << '\n';
  std::cout << os.str();
  return kExitOk;
}

struct SeriesArgs {
  std::vector<std::string> coeffs;
  int order = int(kDefaultOrder);
  BoundArgs params;
};

int cmd_series(const SeriesArgs& a) {
  std::vector<Complex> tail;
  for (const std::string& c : a.coeffs) tail.push_back(parse_complex(c));
  const Index order = std::max<Index>({Index(a.order), Index(tail.size()) + 1, 3});
  const ClassParams p(a.params.lambda, a.params.mu, a.params.delta, a.params.t);
  const Normalized f = Normalized::from_tail(tail, order);
  const Normalized g = invert_compositional(f);
  const Series fop = apply_operator(f, p);
  const Series gop = apply_operator(g, p);
  const SchwarzHead cf = extract_schwarz(fop, p.t());
  const SchwarzHead cg = extract_schwarz(gop, p.t());
  const SchwarzPair fe = membership_feasibility(f[2], f[3], p);

  std::ostringstream os;
  os << "k,f,f_inverse,operator_f,operator_g\n";
  for (Index k = 0; k <= order; ++k) {
    os << k << ',' << complex_text(f[k]) << ',' << complex_text(g[k]) << ','
       << (k <= fop.order() ? complex_text(fop[k]) : "") << ',' << (k <= gop.order() ? complex_text(gop[k]) : "")
       << '\n';
  }
  os << "c1 " << complex_text(cf.c1) << "  c2 " << complex_text(cf.c2) << '\n'
     << "d1 " << complex_text(cg.c1) << "  d2 " << complex_text(cg.c2) << '\n'
     << "order-3 admissible " << (fe.admissible ? "true" : "false") << '\n';
  std::cout << os.str();
  return kExitOk;
}

// Flat `key = value` config files (with `#` comments) mirror the long flags
// of the subcommand they are given to. Entries are spliced in ahead of the
// command-line arguments, and options take their last value, so explicit
// flags override the file.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    std::size_t consumed = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      consumed = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      consumed = 1;
    } else {
      continue;
    }
    if (i == 0) throw UsageError("--config must follow the subcommand");
    std::vector<CLI::ConfigItem> items;
    try {
      items = CLI::ConfigBase().from_file(path);
    } catch (const CLI::FileError& e) {
      throw IoError(e.what());
    }
    std::vector<std::string> injected;
    for (const CLI::ConfigItem& item : items) {
      if (item.name == "++" || item.name == "--") continue;
      if (!item.parents.empty()) throw UsageError("config file must be flat (no sections): " + item.fullname());
      std::string value;
      for (std::size_t k = 0; k < item.inputs.size(); ++k) value += (k ? "," : "") + item.inputs[k];
      injected.push_back("--" + item.name + "=" + value);
    }
    args.erase(args.begin() + std::ptrdiff_t(i), args.begin() + std::ptrdiff_t(i + consumed));
    args.insert(args.begin() + 1, injected.begin(), injected.end());
    break;
  }
  return args;
}

void add_param_options(CLI::App* cmd, BoundArgs& a, bool required) {
  auto* l = cmd->add_option("--lambda", a.lambda, "lambda >= 1");
  auto* m = cmd->add_option("--mu", a.mu, "mu >= 0");
  auto* d = cmd->add_option("--delta", a.delta, "delta >= 0");
  auto* t = cmd->add_option("--t", a.t, "t in (1/2, 1)");
  if (required) {
    for (auto* o : {l, m, d, t}) o->required();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient and Fekete-Szego bounds for a Chebyshev-subordinated bi-univalent class"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Evaluate the |a2|, |a3| and Fekete-Szego bounds");
  add_param_options(bound, bound_args, true);
  bound->add_option("--eta", bound_args.eta, "Fekete-Szego parameter");
  bound->add_option("--variant", bound_args.variant, "threshold reading: corrected | as-printed");
  bound->add_option("--config", "flat key = value file mirroring the flags");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Tabulate bounds over a parameter grid");
  sweep->add_option("--lambda", sweep_args.lambda, "value or start:stop:count");
  sweep->add_option("--mu", sweep_args.mu, "value or start:stop:count");
  sweep->add_option("--delta", sweep_args.delta, "value or start:stop:count");
  sweep->add_option("--t", sweep_args.t, "value or start:stop:count");
  sweep->add_option("--eta", sweep_args.eta, "comma-separated eta list");
  sweep->add_option("--format", sweep_args.format, "csv | json");
  sweep->add_option("--output,-o", sweep_args.output, "output path, '-' for stdout");
  sweep->add_option("--variant", sweep_args.variant, "threshold reading: corrected | as-printed");
  sweep->add_option("--config", "flat key = value file mirroring the flags");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the self-check suites and the brute-force oracle");
  verify->add_option("--lambda", verify_args.lambda, "value or start:stop:count");
  verify->add_option("--mu", verify_args.mu, "value or start:stop:count");
  verify->add_option("--delta", verify_args.delta, "value or start:stop:count");
  verify->add_option("--t", verify_args.t, "value or start:stop:count");
  verify->add_option("--eta", verify_args.eta, "comma-separated eta list");
  verify->add_option("--samples", verify_args.samples, "random samples per check");
  verify->add_option("--seed", verify_args.seed, "RNG seed");
  verify->add_option("--mode", verify_args.mode, "proof-set | full-system");
  verify->add_flag("--refine", verify_args.refine, "local refinement around the best sample");
  verify->add_option("--variant", verify_args.variant, "threshold reading: corrected | as-printed");
  verify->add_option("--output,-o", verify_args.output, "report path, '-' for stdout");
  verify->add_option("--config", "flat key = value file mirroring the flags");

  int cheb_n = 4;
  double cheb_t = 0.6;
  auto* cheb = app.add_subcommand("cheb", "Print U_n(t) by recurrence and by generating function");
  cheb->add_option("--n", cheb_n, "largest degree");
  cheb->add_option("--t", cheb_t, "t in [-1, 1]");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Apply the class operator to f = z + a2 z^2 + ... and its inverse");
  series->add_option("--coeff", series_args.coeffs, "a2, a3, ... in order; each 're' or 're,im'")
      ->take_all()
      ->delimiter(';');
  series->add_option("--order", series_args.order, "truncation order");
  add_param_options(series, series_args.params, false);

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(bound_args);
    if (*sweep) return cmd_sweep(sweep_args);
    if (*verify) return cmd_verify(verify_args);
    if (*cheb) return cmd_cheb(cheb_n, cheb_t);
    if (*series) return cmd_series(series_args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
