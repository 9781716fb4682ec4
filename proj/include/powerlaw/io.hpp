#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "powerlaw/bounds.hpp"
#include "powerlaw/format.hpp"
#include "powerlaw/measure.hpp"
#include "powerlaw/minimize.hpp"
#include "powerlaw/threshold.hpp"

namespace powerlaw {

// Shared measure format: {"n": int, "points": [[f64; n], ...],
// "weights": [f64, ...]}; omitted weights mean uniform 1/k.

inline nlohmann::json measure_to_json(const DiscreteMeasure& mu, bool round12 = true) {
  nlohmann::json j;
  j["n"] = mu.dim;
  nlohmann::json pts = nlohmann::json::array();
  for (int i = 0; i < mu.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int d = 0; d < mu.dim; ++d) {
      const double v = mu.coords[static_cast<std::size_t>(i) * mu.dim + d];
      row.push_back(round12 ? round_sig12(v) : v);
    }
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  nlohmann::json ws = nlohmann::json::array();
  for (double w : mu.weights) ws.push_back(round12 ? round_sig12(w) : w);
  j["weights"] = std::move(ws);
  return j;
}

inline DiscreteMeasure measure_from_json(const nlohmann::json& j) {
  DiscreteMeasure mu;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("measure: field \"n\" (integer dimension) is required");
  mu.dim = j["n"].get<int>();
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("measure: field \"points\" (array of points) is required");
  for (const auto& row : j["points"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != mu.dim)
      throw std::invalid_argument("measure: all points must have the same dimension n");
    for (const auto& v : row) mu.coords.push_back(v.get<double>());
  }
  const auto k = j["points"].size();
  if (j.contains("weights")) {
    for (const auto& v : j["weights"]) mu.weights.push_back(v.get<double>());
    if (mu.weights.size() != k)
      throw std::invalid_argument("measure: weights list must match the number of points");
  } else if (k > 0) {
    mu.weights.assign(k, 1.0 / static_cast<double>(k));
  }
  mu.validate();
  return mu;
}

inline nlohmann::json bound_report_to_json(const BoundReport& rep) {
  nlohmann::json j;
  j["alpha"] = round_sig12(rep.alpha);
  j["beta"] = round_sig12(rep.beta);
  j["n"] = rep.n;
  j["method"] = method_name(rep.method);
  j["lower_bound"] = round_sig12(rep.lower_bound);
  nlohmann::json anchors = nlohmann::json::array();
  for (const auto& a : rep.anchors)
    anchors.push_back({{"beta", round_sig12(a.beta)},
                       {"energy", round_sig12(a.energy)},
                       {"source", a.source}});
  j["anchors"] = std::move(anchors);
  if (std::isfinite(rep.intermediate_beta))
    j["intermediate_beta"] = round_sig12(rep.intermediate_beta);
  return j;
}

/// CSV row "alpha,beta,n,method,lower_bound,anchor0_beta,anchor0_E,anchor1_beta,anchor1_E".
inline std::string bound_report_csv_row(const BoundReport& rep) {
  const Anchor a0 = rep.anchors.size() > 0 ? rep.anchors[0] : Anchor{};
  const Anchor a1 = rep.anchors.size() > 1 ? rep.anchors[1] : a0;
  std::string row = fmt_sig12(rep.alpha) + "," + fmt_sig12(rep.beta) + "," + std::to_string(rep.n) +
                    "," + method_name(rep.method) + "," + fmt_sig12(rep.lower_bound) + "," +
                    fmt_sig12(a0.beta) + "," + fmt_sig12(a0.energy) + "," + fmt_sig12(a1.beta) +
                    "," + fmt_sig12(a1.energy);
  return row;
}

inline nlohmann::json threshold_result_to_json(const ThresholdResult& res) {
  nlohmann::json j;
  j["n"] = res.n;
  j["beta"] = round_sig12(res.beta);
  j["alpha_star"] = round_sig12(res.alpha_star);
  j["method"] = res.method == ThresholdMethod::PhiBased ? "PhiBased" : "FBased";
  j["bracket"] = {round_sig12(res.bracket.first), round_sig12(res.bracket.second)};
  j["residual"] = res.residual;
  j["degenerate"] = res.degenerate;
  return j;
}

inline void write_threshold_csv(std::ostream& os, const std::vector<ThresholdRow>& rows) {
  os << "beta,alpha_star_phi,alpha_star_f,delta\n";
  for (const auto& r : rows)
    os << fmt_sig12(r.beta) << ',' << fmt_sig12(r.alpha_star_phi) << ','
       << fmt_sig12(r.alpha_star_f) << ',' << fmt_sig12(r.delta) << '\n';
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "beta,k_used,cluster_count,energy,lower_bound,radial_std\n";
  for (const auto& r : rows)
    os << fmt_sig12(r.beta) << ',' << r.k_used << ',' << r.cluster_count << ','
       << fmt_sig12(r.energy) << ',' << fmt_sig12(r.lower_bound) << ',' << fmt_sig12(r.radial_std)
       << '\n';
}

/// MinimizeResult as the shared measure JSON plus scalar fields. The recorded
/// energy is re-evaluated on the 12-digit-rounded coordinates so that reading
/// the file back reproduces it.
inline nlohmann::json minimize_result_to_json(const MinimizeResult& res, const Params& p) {
  nlohmann::json j = measure_to_json(res.measure);
  const DiscreteMeasure rounded = measure_from_json(j);
  j["alpha"] = round_sig12(p.alpha);
  j["beta"] = round_sig12(p.beta);
  j["energy"] = round_sig12(energy(p, rounded));
  j["initial_energy"] = round_sig12(res.initial_energy);
  j["grad_norm"] = res.grad_norm;
  j["iterations"] = res.iterations;
  j["restart_index"] = res.restart_index;
  j["diameter_warning"] = res.diameter_warning;
  nlohmann::json cl;
  cl["count"] = res.clusters.count;
  nlohmann::json reps = nlohmann::json::array();
  for (int c = 0; c < res.clusters.count; ++c) {
    nlohmann::json row = nlohmann::json::array();
    for (double v : res.clusters.representative(c)) row.push_back(round_sig12(v));
    reps.push_back(std::move(row));
  }
  cl["representatives"] = std::move(reps);
  nlohmann::json masses = nlohmann::json::array();
  for (double m : res.clusters.masses) masses.push_back(round_sig12(m));
  cl["masses"] = std::move(masses);
  cl["max_intra_radius"] = res.clusters.max_intra_radius;
  j["clusters"] = std::move(cl);
  return j;
}

}  // namespace powerlaw
