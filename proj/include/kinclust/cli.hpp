#ifndef KINCLUST_CLI_HPP
#define KINCLUST_CLI_HPP

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kinclust/arrangement.hpp"
#include "kinclust/io.hpp"
#include "kinclust/md_solvers.hpp"
#include "kinclust/oracle.hpp"
#include "kinclust/sd_solvers.hpp"

namespace kinclust::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << data;
}

/// "p/q (decimal)" with the decimal at 12 significant digits.
inline std::string format_value(const Scalar& v) {
  return to_fraction_string(v) + " (" + to_decimal_string(v, 12) + ")";
}

namespace detail {

inline void print_solution(std::ostream& out, const std::string& objective, const std::string& method,
                           const Clustering& c, const Scalar& value) {
  out << "objective: " << objective << "\n";
  out << "method: " << method << "\n";
  out << "clusters: " << c.nonempty_count() << "\n";
  out << "value: " << format_value(value) << "\n";
  out << "clustering: " << to_string(c) << "\n";
}

}  // namespace detail

/// Entry point of the `kinclust` tool. Returns 0 on success, 1 on bad input
/// or usage, 2 when the requested number of clusters is infeasible.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"Clustering of points moving linearly on a line over t in [0,1]", "kinclust"};
  app.require_subcommand(1);

  std::string file;
  std::size_t k = 0;
  std::string method;
  std::string clusters_out;

  auto* holes_cmd = app.add_subcommand("holes", "List the holes of the trajectory arrangement");
  holes_cmd->add_option("file", file, "Instance file")->required();

  auto* sd_cmd = app.add_subcommand("sd", "Minimize the sum of cluster diameters");
  sd_cmd->add_option("method", method, "exact | wellsep | brute")
      ->required()
      ->check(CLI::IsMember({"exact", "wellsep", "brute"}));
  sd_cmd->add_option("file", file, "Instance file")->required();
  sd_cmd->add_option("-k", k, "Number of clusters")->required();
  sd_cmd->add_option("-o,--output", clusters_out, "Write the clustering to this file");

  std::string d_text, eps_text = "0.05";
  auto* md_cmd = app.add_subcommand("md", "Minimize the maximum cluster diameter");
  md_cmd->add_option("method", method, "gp | bsearch | kcenter | wellsep | brute")
      ->required()
      ->check(CLI::IsMember({"gp", "bsearch", "kcenter", "wellsep", "brute"}));
  md_cmd->add_option("file", file, "Instance file")->required();
  md_cmd->add_option("-k", k, "Number of clusters");
  md_cmd->add_option("-D", d_text, "Distance threshold for gp (exact decimal or p/q)");
  md_cmd->add_option("--eps", eps_text, "Binary search precision (exact decimal or p/q)");
  md_cmd->add_option("-o,--output", clusters_out, "Write the clustering to this file");

  GeneratorConfig gen_cfg;
  std::string x0_min = "-5", x0_max = "5", slope_min = "-5", slope_max = "5", gen_out;
  std::string gen_name;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("-n", gen_cfg.n, "Number of trajectories")->required();
  gen_cmd->add_option("--seed", gen_cfg.seed, "Random seed")->required();
  gen_cmd->add_option("--x0-min", x0_min, "Lower bound for positions at t=0");
  gen_cmd->add_option("--x0-max", x0_max, "Upper bound for positions at t=0");
  gen_cmd->add_option("--slope-min", slope_min, "Lower bound for velocities");
  gen_cmd->add_option("--slope-max", slope_max, "Upper bound for velocities");
  gen_cmd->add_option("--grid", gen_cfg.grid, "Denominator of generated values");
  gen_cmd->add_option("--name", gen_name, "Instance name");
  gen_cmd->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");

  std::string render_clusters, render_out;
  bool render_holes = false;
  auto* render_cmd = app.add_subcommand("render", "Draw the instance as SVG");
  render_cmd->add_option("file", file, "Instance file")->required();
  auto* clusters_opt = render_cmd->add_option("--clusters", render_clusters, "Clustering file to shade");
  render_cmd->add_flag("--holes", render_holes, "Outline the bounded holes")->excludes(clusters_opt);
  render_cmd->add_option("-o,--output", render_out, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*holes_cmd) {
      const TrajectorySet s = parse_instance(read_file(file));
      const HoleSet holes = compute_holes(s);
      out << "# index kind left_set t_lo t_hi\n";
      for (std::size_t i = 0; i < holes.size(); ++i) {
        const Hole& h = holes[i];
        out << i << " " << to_string(h.kind) << " " << to_string(h.left_set) << " "
            << to_fraction_string(h.t_lo) << " " << to_fraction_string(h.t_hi) << "\n";
      }
      return kExitOk;
    }

    if (*sd_cmd) {
      const TrajectorySet s = parse_instance(read_file(file));
      SdSolution sol;
      if (method == "exact") sol = sd_exact_goodseq(s, k);
      else if (method == "wellsep") sol = sd_wellsep_dp(s, k);
      else sol = oracle::brute_opt_sd(s, k);
      detail::print_solution(out, "sd", sol.method, sol.clustering, sol.value);
      if (!clusters_out.empty()) write_file(clusters_out, write_clustering(sol.clustering));
      if (!sol.feasible) {
        err << "infeasible: no well-separated clustering with " << k << " clusters; best has "
            << sol.achieved_k << "\n";
        return kExitInfeasible;
      }
      return kExitOk;
    }

    if (*md_cmd) {
      const TrajectorySet s = parse_instance(read_file(file));
      if (method != "gp" && k == 0) throw ParseError("md " + method + ": -k is required");
      if (method == "gp") {
        if (d_text.empty()) throw ParseError("md gp: -D is required");
        MdSolution sol = gp(s, parse_scalar(d_text));
        detail::print_solution(out, "md", sol.method, sol.clustering, sol.value);
        if (!clusters_out.empty()) write_file(clusters_out, write_clustering(sol.clustering));
        return kExitOk;
      }
      if (method == "bsearch") {
        MdSolution sol = bsearch(s, k, parse_scalar(eps_text));
        detail::print_solution(out, "md", sol.method, sol.clustering, sol.value);
        if (sol.b) {
          out << "interval: [" << to_fraction_string(*sol.a) << ", " << to_fraction_string(*sol.b)
              << "]\n";
          out << "iterations: " << sol.iterations << "\n";
        }
        if (!clusters_out.empty()) write_file(clusters_out, write_clustering(sol.clustering));
        return kExitOk;
      }
      if (method == "kcenter") {
        KCenterResult r = kcenter_gonzalez(s, k);
        detail::print_solution(out, "md", "kcenter", r.clustering, md_value(s, r.clustering));
        out << "radius: " << format_value(r.centers.radius) << "\n";
        if (!clusters_out.empty()) write_file(clusters_out, write_clustering(r.clustering));
        return kExitOk;
      }
      if (method == "wellsep") {
        SdSolution sol = md_wellsep_dp(s, k);
        detail::print_solution(out, "md", sol.method, sol.clustering, sol.value);
        if (!clusters_out.empty()) write_file(clusters_out, write_clustering(sol.clustering));
        if (!sol.feasible) {
          err << "infeasible: no well-separated clustering with " << k << " clusters; best has "
              << sol.achieved_k << "\n";
          return kExitInfeasible;
        }
        return kExitOk;
      }
      MdSolution sol = oracle::brute_opt_md(s, k);
      detail::print_solution(out, "md", sol.method, sol.clustering, sol.value);
      if (!clusters_out.empty()) write_file(clusters_out, write_clustering(sol.clustering));
      return kExitOk;
    }

    if (*gen_cmd) {
      gen_cfg.x0_lo = parse_scalar(x0_min);
      gen_cfg.x0_hi = parse_scalar(x0_max);
      gen_cfg.slope_lo = parse_scalar(slope_min);
      gen_cfg.slope_hi = parse_scalar(slope_max);
      const TrajectorySet s = generate_instance(gen_cfg);
      std::optional<std::string> name;
      if (!gen_name.empty()) name = gen_name;
      const std::string doc = write_instance(s, name);
      if (gen_out.empty()) out << doc;
      else write_file(gen_out, doc);
      return kExitOk;
    }

    if (*render_cmd) {
      const TrajectorySet s = parse_instance(read_file(file));
      std::string svg;
      if (!render_clusters.empty()) {
        const Clustering c = parse_clustering(read_file(render_clusters), s);
        svg = render_svg(s, Overlay::clustering, &c);
      } else {
        svg = render_svg(s, render_holes ? Overlay::holes : Overlay::none);
      }
      write_file(render_out, svg);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace kinclust::cli

#endif  // KINCLUST_CLI_HPP
