#include "kwall/cone.hpp"

namespace kwall {

ConeShapeReport is_cone_shape(const FermatModel& model, const KSeries& f) {
  const SeriesConfig& cfg = f.config();
  ConeShapeReport report{true, {}, KSeries(cfg), KSeries(cfg)};
  auto fail = [&report](std::string why) {
    report.ok = false;
    report.diagnostics.push_back(std::move(why));
  };
  if (cfg.d != model.d()) {
    fail("series d does not match the model");
    return report;
  }

  KSeries u_free_plus(cfg);
  for (const auto& [m, c] : f - dilaton_series(cfg)) {
    KDecomposition parts;
    try {
      validate_kelement(model, c);
      parts = decompose(c);
    } catch (const Error& e) {
      fail(m.to_string() + ": " + e.what());
      continue;
    }
    if (!parts.minus.is_zero()) {
      if (m.degree() < 2)
        fail(m.to_string() + ": nonzero K- part below degree 2");
      else
        report.tail.add(m, parts.minus);
    }
    if (m.u_degree() == 0)
      u_free_plus.add(m, parts.plus);
    else
      report.t_hat_minus_t.add(m, parts.plus);
  }

  const KSeries mismatch = u_free_plus - input_series(model, cfg);
  for (const auto& [m, c] : mismatch)
    fail(m.to_string() + ": u-free Laurent part differs from t(1/q)");
  return report;
}

}  // namespace kwall
