#pragma once

#include "bsg/reeb.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bsg {

struct CheckRecord {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string statement;
  std::string inputs;
  std::uint64_t seed = 0;
  bool pass = true;  // conjunction of the detail records
  std::vector<CheckRecord> details;
  std::vector<std::string> unverified_notes;

  /// Record a comparison; passes when the two sides are equal.
  void check(std::string name, std::string expected, std::string actual);
  void check(std::string name, std::string expected, std::string actual, bool ok);
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int grid = 8;  // nerve grid; stability is checked against 2 * grid
  Rational overlap = Rational(1, 3);
  int depth = 1;
  int min_samples = 50;
};

/// Statement ids, in suite order.
const std::vector<std::string>& statement_ids();

/// Reeb space shape: graph with boundary endpoints at the definite folds,
/// or a nerve consistent with a surface whose boundary is the fold image.
VerificationReport verify_reeb_structure(const PLMap& F, const VerifyOptions& opts = {});
/// Collar / core fibre checks.
VerificationReport verify_decomposition(const PLMap& F, const VerifyOptions& opts = {});
/// H^*(N; R) against H^*(W_F; R) for R in {Z, Z/2}, and H^k(N) = 0 above the
/// target dimension.
VerificationReport verify_cohomology_iso(const PLMap& F, const VerifyOptions& opts = {});
/// Abelianized fundamental groups of N and W_F, and free ranks when both
/// presentations simplify to free ones.
VerificationReport verify_pi1(const PLMap& F, const VerifyOptions& opts = {});
/// Height function on a generated complex: boundary special generic with an
/// interval Reeb graph, on a domain with the invariants of a point.
VerificationReport verify_function_theorem(const SimplicialComplex& N, const VerifyOptions& opts = {});
/// Boundary connected sum of r solid tori and rp twisted ones with its
/// planar map (the ball and its projection when r + rp = 0).
VerificationReport verify_3manifold_theorem(int r, int rp, int res = 8, const VerifyOptions& opts = {});

/// Every verifier over the standard constructions, ordered by statement id.
std::vector<VerificationReport> run_suite(const VerifyOptions& opts = {});

std::string describe(const BettiProfile& h);
std::string describe(const AbelianGroup& g);

}  // namespace bsg
