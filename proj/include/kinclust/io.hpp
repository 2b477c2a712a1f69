#ifndef KINCLUST_IO_HPP
#define KINCLUST_IO_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kinclust/arrangement.hpp"
#include "kinclust/geometry.hpp"

namespace kinclust {

// Instance document:
//   {"name": "fig5", "trajectories": [{"x0": "-0.9", "x1": "2"}, ...]}
// Coordinates are strings holding exact decimals ("-2.4142135624") or
// fractions ("1/3").

struct InstanceFile {
  std::optional<std::string> name;
  TrajectorySet trajectories;
};

namespace detail {

inline nlohmann::json parse_json(std::string_view bytes) {
  try {
    return nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

inline Scalar scalar_field(const nlohmann::json& row, const char* key, std::size_t index) {
  std::string where = "trajectories[" + std::to_string(index) + "]." + key;
  if (!row.contains(key)) throw ParseError(where + ": missing");
  const auto& v = row.at(key);
  if (!v.is_string()) throw ParseError(where + ": expected a decimal string");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace detail

inline InstanceFile parse_instance_file(std::string_view bytes) {
  const nlohmann::json doc = detail::parse_json(bytes);
  if (!doc.is_object()) throw ParseError("instance: top level must be an object");
  InstanceFile out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("instance: name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("trajectories") || !doc["trajectories"].is_array())
    throw ParseError("instance: missing trajectories list");
  const auto& rows = doc["trajectories"];
  if (rows.empty()) throw ParseError("instance: trajectories list is empty");
  std::vector<Trajectory> items;
  items.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_object())
      throw ParseError("trajectories[" + std::to_string(i) + "]: expected an object");
    items.push_back({detail::scalar_field(rows[i], "x0", i), detail::scalar_field(rows[i], "x1", i)});
  }
  try {
    out.trajectories = TrajectorySet(std::move(items));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return out;
}

inline TrajectorySet parse_instance(std::string_view bytes) {
  return parse_instance_file(bytes).trajectories;
}

inline std::string write_instance(const TrajectorySet& s, const std::optional<std::string>& name = {}) {
  nlohmann::ordered_json doc;
  if (name) doc["name"] = *name;
  doc["trajectories"] = nlohmann::ordered_json::array();
  for (const auto& tr : s)
    doc["trajectories"].push_back({{"x0", to_exact_string(tr.x0)}, {"x1", to_exact_string(tr.x1)}});
  return doc.dump(2) + "\n";
}

// Clustering document: {"clusters": [[0, 2], [1, 3]]}

inline Clustering parse_clustering(std::string_view bytes, const TrajectorySet& s) {
  const nlohmann::json doc = detail::parse_json(bytes);
  if (!doc.is_object() || !doc.contains("clusters") || !doc["clusters"].is_array())
    throw ParseError("clustering: missing clusters list");
  Clustering c;
  for (const auto& row : doc["clusters"]) {
    if (!row.is_array()) throw ParseError("clustering: each cluster must be a list");
    std::vector<Index> ids;
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) throw ParseError("clustering: indices must be nonnegative integers");
      ids.push_back(v.get<Index>());
    }
    try {
      c.clusters.emplace_back(std::move(ids));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("clustering: ") + e.what());
    }
  }
  try {
    validate_clustering(s, c);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return c;
}

inline std::string write_clustering(const Clustering& c) {
  nlohmann::json doc;
  doc["clusters"] = nlohmann::json::array();
  for (const auto& cl : c.clusters) doc["clusters"].push_back(cl.ids());
  return doc.dump() + "\n";
}

/// Random instances on a rational grid: x0 = lo + i/grid, x1 = x0 + slope with
/// slope = lo + j/grid. Deterministic for a fixed seed.
struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t n = 9;
  Scalar x0_lo = -5, x0_hi = 5;
  Scalar slope_lo = -5, slope_hi = 5;
  unsigned long grid = 10;
};

inline TrajectorySet generate_instance(const GeneratorConfig& cfg) {
  if (cfg.grid == 0) throw std::invalid_argument("generator: grid must be positive");
  if (cfg.x0_hi < cfg.x0_lo || cfg.slope_hi < cfg.slope_lo)
    throw std::invalid_argument("generator: empty range");
  auto steps = [&](const Scalar& lo, const Scalar& hi) {
    Scalar span = (hi - lo) * cfg.grid;
    mpz_class q(span);  // truncates
    return q;
  };
  const mpz_class nx = steps(cfg.x0_lo, cfg.x0_hi);
  const mpz_class nv = steps(cfg.slope_lo, cfg.slope_hi);
  if (!nx.fits_ulong_p() || !nv.fits_ulong_p()) throw std::invalid_argument("generator: grid too fine");
  const mpz_class capacity = (nx + 1) * (nv + 1);
  if (capacity < cfg.n)
    throw std::invalid_argument("generator: grid too small for " + std::to_string(cfg.n) +
                                " distinct trajectories");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<unsigned long> pick_x(0, nx.get_ui());
  std::uniform_int_distribution<unsigned long> pick_v(0, nv.get_ui());
  std::set<std::pair<unsigned long, unsigned long>> used;
  std::vector<Trajectory> items;
  std::size_t attempts = 0;
  while (items.size() < cfg.n) {
    if (++attempts > 1000 * (cfg.n + 1))
      throw std::invalid_argument("generator: could not draw distinct trajectories");
    auto key = std::make_pair(pick_x(rng), pick_v(rng));
    if (!used.insert(key).second) continue;
    Scalar x0 = cfg.x0_lo + Scalar(key.first) / cfg.grid;
    Scalar v = cfg.slope_lo + Scalar(key.second) / cfg.grid;
    x0.canonicalize();
    v.canonicalize();
    Scalar x1 = x0 + v;
    items.push_back({x0, x1});
  }
  return TrajectorySet(std::move(items));
}

enum class Overlay { none, clustering, holes };

namespace detail {

struct SvgFrame {
  double xmin, xmax;
  double width = 800, height = 400, margin = 30;

  double px(const Scalar& x) const {
    return margin + (to_double(x) - xmin) / (xmax - xmin) * (width - 2 * margin);
  }
  double py(const Scalar& t) const { return height - margin - to_double(t) * (height - 2 * margin); }
};

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

/// Points of `e` with t in [lo, hi], including both ends.
inline std::vector<Breakpoint> clip(const Envelope& e, const Scalar& lo, const Scalar& hi) {
  std::vector<Breakpoint> out{{lo, e.value_at(lo)}};
  for (const auto& p : e.points())
    if (p.t > lo && p.t < hi) out.push_back(p);
  out.push_back({hi, e.value_at(hi)});
  return out;
}

inline std::string polygon(const SvgFrame& f, const std::vector<Breakpoint>& up,
                           const std::vector<Breakpoint>& down, const std::string& cls,
                           const std::string& fill) {
  std::string pts;
  auto add = [&](const Breakpoint& p) {
    if (!pts.empty()) pts += " ";
    pts += fmt(f.px(p.x)) + "," + fmt(f.py(p.t));
  };
  for (const auto& p : up) add(p);
  for (auto it = down.rbegin(); it != down.rend(); ++it) add(*it);
  return "  <polygon class=\"" + cls + "\" points=\"" + pts + "\" fill=\"" + fill +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
}

}  // namespace detail

/// SVG 1.1 drawing of the strip: x horizontal, t vertical (t = 0 at the
/// bottom). A clustering overlay shades each nontrivial cluster's span; the
/// holes overlay outlines every bounded hole.
inline std::string render_svg(const TrajectorySet& s, Overlay overlay,
                              const Clustering* clustering = nullptr) {
  if (overlay == Overlay::clustering && clustering == nullptr)
    throw std::invalid_argument("render_svg: clustering overlay needs a clustering");
  detail::SvgFrame f{0, 1};
  bool first = true;
  for (const auto& tr : s) {
    for (const Scalar* x : {&tr.x0, &tr.x1}) {
      double v = to_double(*x);
      if (first || v < f.xmin) f.xmin = v;
      if (first || v > f.xmax) f.xmax = v;
      first = false;
    }
  }
  if (f.xmax - f.xmin < 1e-12) {
    f.xmin -= 1;
    f.xmax += 1;
  }
  double pad = 0.05 * (f.xmax - f.xmin);
  f.xmin -= pad;
  f.xmax += pad;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fmt(f.width) +
         "\" height=\"" + detail::fmt(f.height) + "\">\n";
  out += "  <rect class=\"strip\" x=\"" + detail::fmt(f.margin) + "\" y=\"" + detail::fmt(f.margin) +
         "\" width=\"" + detail::fmt(f.width - 2 * f.margin) + "\" height=\"" +
         detail::fmt(f.height - 2 * f.margin) + "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4,4\"/>\n";

  static const char* palette[] = {"#8dd3c7", "#fb8072", "#80b1d3", "#fdb462", "#b3de69",
                                  "#fccde5", "#bebada", "#ffffb3", "#d9d9d9", "#bc80bd"};
  if (overlay == Overlay::clustering) {
    std::size_t colour = 0;
    for (const auto& c : clustering->clusters) {
      if (c.size() < 2) continue;
      auto left = envelope(s, c, Side::left).points();
      auto right = envelope(s, c, Side::right).points();
      out += detail::polygon(f, left, right, "span", palette[colour++ % 10]);
    }
  } else if (overlay == Overlay::holes) {
    const Cluster all = s.all();
    for (const auto& h : compute_holes(s)) {
      if (h.kind != HoleKind::bounded) continue;
      Envelope lhs = envelope(s, h.left_set, Side::right);
      Envelope rhs = envelope(s, difference(all, h.left_set), Side::left);
      out += detail::polygon(f, detail::clip(lhs, h.t_lo, h.t_hi), detail::clip(rhs, h.t_lo, h.t_hi),
                             "hole", "#e0ecf8");
    }
  }

  for (Index i = 0; i < s.size(); ++i) {
    const auto& tr = s[i];
    out += "  <line class=\"trajectory\" x1=\"" + detail::fmt(f.px(tr.x0)) + "\" y1=\"" +
           detail::fmt(f.py(Scalar(0))) + "\" x2=\"" + detail::fmt(f.px(tr.x1)) + "\" y2=\"" +
           detail::fmt(f.py(Scalar(1))) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    out += "  <text x=\"" + detail::fmt(f.px(tr.x0)) + "\" y=\"" + detail::fmt(f.py(Scalar(0)) + 16) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(i) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace kinclust

#endif  // KINCLUST_IO_HPP
