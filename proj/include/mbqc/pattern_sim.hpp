#pragma once

#include <cstdint>
#include <optional>

#include "mbqc/dense.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

struct PatternSimOptions {
  double tol = 1e-9;
  int threads = 1;          // branch fan-out; reduction order is branch-index order
  int max_live = 12;        // simultaneous dense qubits
  int max_measured = 14;    // branch cap (2^k branches)
  int max_total = 20;       // distinct qubits overall
};

struct PatternSimResult {
  std::optional<DenseMatrix> unitary;  // rows: sorted O, cols: sorted I
  std::string reason;                  // set when not unitary
  uint64_t witness_branch_a = 0;       // a pair of branches exhibiting failure
  uint64_t witness_branch_b = 0;

  bool ok() const { return unitary.has_value(); }
};

// Exact exhaustive branch simulation: enumerate all measurement-result
// branches, apply projections with dependency-resolved angle adaptations and
// corrections, and test that every non-null Kraus operator is proportional to
// one common isometry with branch weights summing to 1.
// Throws TooLarge when the caps are exceeded, InvalidPattern when ill-formed.
PatternSimResult pattern_unitary(const MeasurementPattern& p, const PatternSimOptions& opts = {});

}  // namespace mbqc
