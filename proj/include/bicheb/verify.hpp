#ifndef BICHEB_VERIFY_HPP
#define BICHEB_VERIFY_HPP

// Self-check suites run by `bicheb verify`. Every suite is deterministic in
// its inputs and seed, and reports text with no timing information so that
// reruns are byte-identical.

#include <bicheb/bounds.hpp>
#include <bicheb/oracle.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bicheb {

struct SuiteResult {
  std::string name;
  bool passed = false;
  // Informational suites are reported but never fail the run.
  bool informational = false;
  std::vector<std::string> lines;
};

struct VerifyOptions {
  std::vector<ClassParams> grid;
  std::vector<double> etas;
  OracleConfig oracle;
  MVariant variant = MVariant::kCorrected;
};

// The 3^4 grid lambda in {1,2,3}, mu in {0,1,2}, delta in {0,0.5,1},
// t in {0.55,0.75,0.95} with eta in {0,1,2}.
VerifyOptions default_verify_options();

// Parameter grid (and eta grid for free-eta Fekete-Szego corollaries) on the
// corollary's own slice, at least 81 evaluation points each.
std::pair<std::vector<ClassParams>, std::vector<double>> reduction_grid(Corollary c);

SuiteResult verify_chebyshev();
SuiteResult verify_inverse_series(std::uint64_t seed);
SuiteResult verify_operator_identities(std::uint64_t seed);
SuiteResult verify_reductions();
SuiteResult verify_fs_continuity(MVariant variant, std::uint64_t seed);
SuiteResult verify_oracle(const VerifyOptions& opts);

std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

// One "[PASS]/[FAIL]/[INFO] name" header per suite followed by its lines.
std::string render(const std::vector<SuiteResult>& suites);
bool all_passed(const std::vector<SuiteResult>& suites);

}  // namespace bicheb

#endif  // BICHEB_VERIFY_HPP
