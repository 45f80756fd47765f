#pragma once

#include <vector>

#include "tsw/linkdata/conway.hpp"
#include "tsw/surgery/checks.hpp"

namespace tsw {

struct SuiteOptions {
  // Charges to test; empty means a few classes near the base charge.
  std::vector<std::vector<long>> charges;
  std::size_t shifts = 3;  // random equivariance shifts per charge
  unsigned seed = 1;
};

// Table validation, then per charge: duality, reassembly, equivariance,
// projection (b1 > 0), fast path and split SW (algebraically split),
// torsion-function duality and integrality. Errors become failed reports.
std::vector<CheckReport> check_suite(const FramedLink& l, const ConwayTable& table, const SuiteOptions& opt = {});

}  // namespace tsw
