#pragma once

#include <string>
#include <vector>

#include "tsw/linkdata/conway.hpp"
#include "tsw/surgery/presentation.hpp"

namespace tsw {

// Product of the signs of the nonzero entries of a congruence
// diagonalization over Q; +1 for the zero form.
int det0(const IntMatrix& b);

// (-1)^{b1 + m + 1} det0(Lambda): converts omega_L normalized values to the
// intrinsic orientation of the surgered manifold.
int orientation_sign(const FramedLink& l);

struct CheckReport {
  std::string name;
  bool ok = true;
  std::string detail;
};

// bar(tau(k)) = tau(2 - k), and per character bar = phi(c(e))^{-1} tau^phi
// up to sign.
CheckReport duality_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k);
// Reassembly of the per-character components against tau.
CheckReport cross_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k);
// tau(k + 2v) = [prod t^v] tau(k).
CheckReport equivariance_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                               const std::vector<long>& v);
// delta equals the image of tau in Q(H/Tors).
CheckReport projection_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k);
// Split fast path against the general evaluation.
CheckReport fast_path_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k);

}  // namespace tsw
