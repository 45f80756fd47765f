#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsw/linkdata/conway.hpp"
#include "tsw/surgery/checks.hpp"
#include "tsw/surgery/presentation.hpp"

namespace tsw {

// [t_n] when every other meridian is torsion; NeedsDirection otherwise.
GroupElement default_direction(const SurgeryPresentation& p);

// Coefficient of 1 in tau (b1 >= 2) or in its expansion in powers of t^{-1}
// (b1 = 1). Defined up to one sign common to all charges.
Integer sw_value(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                 const std::optional<GroupElement>& direction = std::nullopt);

struct SwEntry {
  std::vector<long> charge;  // canonical representative
  Integer value;
};

struct SwTable {
  std::vector<SwEntry> entries;
  std::string direction;  // rendered t for b1 = 1, empty otherwise
  long radius = 0;
  // The overall sign of the function is not determined.
  bool global_sign_undetermined = true;
  std::size_t support_size() const;
};

SwTable sw_table(const SurgeryPresentation& p, const ConwayTable& table, long radius,
                 const std::optional<GroupElement>& direction = std::nullopt);

// Closed form for algebraically split links (t = [t_n] when b1 = 1).
// Equals (-1)^{m-1} times sw_value.
Integer sw_split_value(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k);
SwTable sw_split_table(const SurgeryPresentation& p, const ConwayTable& table, long radius);

// T(k) = (tau)_1 for b1 != 1 and T_t(k) = (tau)^t_1 for b1 = 1.
Rational torsion_function(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                          const std::optional<GroupElement>& direction = std::nullopt);

// T(k) = T(2 - k), or T_t(k) = T_{t^-1}(2 - k) when b1 = 1.
CheckReport torsion_duality_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                                  const std::optional<GroupElement>& direction = std::nullopt);

}  // namespace tsw
