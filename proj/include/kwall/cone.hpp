#pragma once

// Shape test for series F(t, u, q) of the form
//   (1 - q) phi_0 + t(1/q) + (Laurent terms of positive u-degree) + (K- tail),
// with the K- tail supported in total degree >= 2.

#include <string>
#include <vector>

#include "kwall/series.hpp"

namespace kwall {

struct ConeShapeReport {
  bool ok = true;
  std::vector<std::string> diagnostics;
  KSeries t_hat_minus_t;  // plus parts at positive u-degree
  KSeries tail;           // minus parts
};

ConeShapeReport is_cone_shape(const FermatModel& model, const KSeries& f);

}  // namespace kwall
