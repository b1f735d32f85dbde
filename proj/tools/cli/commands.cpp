#include "cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/cluster.hpp"
#include "cli/io.hpp"
#include "cli/svg.hpp"
#include "cli/synth.hpp"
#include "elastic/analysis.hpp"
#include "elastic/fab.hpp"
#include "elastic/parallel.hpp"
#include "elastic/rng.hpp"

namespace elastic::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void print_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  std::cout << buf << "\n";
}

struct MatchOpts {
  std::string source, target, out = "match.json", svg;
  double a = 1.0, b = 0.5, lambda = 20.0;
  std::string kernel_dir = "binet";
  double sigma_pos = 0.0;  // 0 = 0.2 x target bounding-box diagonal
  double sigma_dir = 1.0;
  bool rotations = false;
  bool exact = false;
  bool no_seam = false;
  bool continuation = false;
  std::string init = "source";
  int n = 100;
  int max_iter = 500;
  double grad_tol = 1e-6;
  int slope_step = 4;
  int rotation_grid = 64;
  std::uint64_t seed = 0;
  int threads = 0;
};

void add_match_options(CLI::App* cmd, MatchOpts& o, bool needs_files) {
  if (needs_files) {
    cmd->add_option("--source", o.source, "source curve file")->required();
    cmd->add_option("--target", o.target, "target curve file")->required();
  }
  cmd->add_option("--a", o.a, "bending weight a");
  cmd->add_option("--b", o.b, "stretching weight b");
  cmd->add_option("--lambda", o.lambda, "fidelity weight");
  cmd->add_option("--kernel-dir", o.kernel_dir, "direction kernel")
      ->check(CLI::IsMember({"current", "binet", "oriented-gaussian"}));
  cmd->add_option("--sigma-pos", o.sigma_pos,
                  "position kernel bandwidth (0 = auto from target)");
  cmd->add_option("--sigma-dir", o.sigma_dir, "direction kernel bandwidth");
  cmd->add_flag("--rotations", o.rotations, "quotient out rotations");
  cmd->add_flag("--exact", o.exact, "dynamic-programming exact matching");
  cmd->add_flag("--no-seam", o.no_seam, "disable seam search for closed curves");
  cmd->add_flag("--continuation", o.continuation, "warm start from lambda/10");
  cmd->add_option("--init", o.init, "relaxed solver start")
      ->check(CLI::IsMember({"source", "target"}));
  cmd->add_option("--n", o.n, "working vertex count")->check(CLI::Range(4, 100000));
  cmd->add_option("--max-iter", o.max_iter, "solver iteration cap");
  cmd->add_option("--grad-tol", o.grad_tol, "solver gradient tolerance");
  cmd->add_option("--slope", o.slope_step, "DP lattice move bound K");
  cmd->add_option("--rotation-grid", o.rotation_grid, "rotation candidates R");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--threads", o.threads, "worker threads (0 = machine)");
}

VarifoldKernel kernel_for(const MatchOpts& o, const DiscreteCurve& target) {
  VarifoldKernel kernel;
  kernel.direction = parse_direction_kernel(o.kernel_dir);
  kernel.sigma_dir = o.sigma_dir;
  kernel.sigma_pos =
      o.sigma_pos > 0.0 ? o.sigma_pos : 0.2 * bounding_box_diagonal(target);
  return kernel;
}

ExactMatchConfig exact_config(const MatchOpts& o, bool closed) {
  ExactMatchConfig cfg;
  cfg.a = o.a;
  cfg.b = o.b;
  cfg.max_slope_step = o.slope_step;
  cfg.rotation_search = o.rotations;
  cfg.rotation_grid = o.rotation_grid;
  cfg.seam_search = closed && !o.no_seam;
  cfg.threads = o.threads;
  return cfg;
}

RelaxedConfig relaxed_config(const MatchOpts& o, const DiscreteCurve& target) {
  RelaxedConfig cfg;
  cfg.a = o.a;
  cfg.b = o.b;
  cfg.lambda = o.lambda;
  cfg.kernel = kernel_for(o, target);
  cfg.optimize_rotation = o.rotations;
  cfg.init = o.init == "target" ? InitMode::Target : InitMode::Source;
  cfg.max_iter = o.max_iter;
  cfg.grad_tol = o.grad_tol;
  cfg.continuation = o.continuation;
  return cfg;
}

MatchContext context_for(const MatchOpts& o, const DiscreteCurve& target) {
  MatchContext ctx;
  ctx.a = o.a;
  ctx.b = o.b;
  ctx.lambda = o.lambda;
  ctx.n = o.n;
  ctx.exact = o.exact;
  ctx.rotations = o.rotations;
  ctx.kernel = kernel_for(o, target);
  return ctx;
}

MatchResult run_match(const MatchOpts& o, const DiscreteCurve& source,
                      const DiscreteCurve& target) {
  if (o.exact) return exact_distance(source, target, exact_config(o, target.closed));
  return relaxed_match(source, target, relaxed_config(o, target));
}

int cmd_match(const MatchOpts& o) {
  DiscreteCurve source, target;
  try {
    source = resample_uniform(read_curve(o.source), o.n);
    target = resample_uniform(read_curve(o.target), o.n);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    const MatchResult result = run_match(o, source, target);
    write_match_json(o.out, result, context_for(o, target));
    if (!o.svg.empty()) {
      write_curves_svg(o.svg, {{source, "#1f77b4", 2.0},
                               {target, "#d62728", 2.0},
                               {result.end_curve, "#2ca02c", 2.5}});
    }
    print_value(result.elastic_distance);
    return result.termination == Termination::LineSearchFailure ? 3 : 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_geodesic(const MatchOpts& o, int steps, const std::string& prefix) {
  DiscreteCurve source, target;
  try {
    source = resample_uniform(read_curve(o.source), o.n);
    target = resample_uniform(read_curve(o.target), o.n);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    const MatchResult result = run_match(o, source, target);

    json panels = json::array();
    std::vector<std::vector<StyledCurve>> svg_panels;
    std::vector<std::string> captions;
    for (int k = 0; k < steps; ++k) {
      const double t = steps == 1 ? 1.0 : static_cast<double>(k) / (steps - 1);
      json panel{{"t", t}};
      std::vector<StyledCurve> layer{{target, "#f2b8b8", 1.5}};
      try {
        const auto snap = geodesic(source, result.end_curve, o.a, o.b, {t});
        json points = json::array();
        for (const Complex& v : snap[0].vertices)
          points.push_back(json::array({v.real(), v.imag()}));
        panel["curve"] = {{"points", std::move(points)}, {"closed", snap[0].closed}};
        layer.push_back({snap[0], "#1f77b4", 2.5});
      } catch (const ZeroCrossing& zc) {
        std::cerr << "panel t=" << t << ": " << zc.what() << "\n";
        panel["error"] = zc.what();
      }
      panels.push_back(std::move(panel));
      svg_panels.push_back(std::move(layer));
      char cap[32];
      std::snprintf(cap, sizeof(cap), "t = %.3g", t);
      captions.emplace_back(cap);
    }

    json doc{{"a", o.a},
             {"b", o.b},
             {"lambda", o.lambda},
             {"exact", o.exact},
             {"elastic_distance", result.elastic_distance},
             {"panels", std::move(panels)}};
    {
      std::ofstream out(prefix + ".json", std::ios::binary);
      if (!out) throw IoError("cannot write: " + prefix + ".json");
      out << doc.dump(2) << "\n";
    }
    write_panels_svg(prefix + ".svg", svg_panels, captions);
    print_value(result.elastic_distance);
    return result.termination == Termination::LineSearchFailure ? 3 : 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_distmat(const MatchOpts& o, const std::string& dir, const std::string& out) {
  std::vector<DiscreteCurve> curves;
  std::vector<std::string> labels;
  try {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = entry.path().extension().string();
      if (ext == ".json" || ext == ".csv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) {
      curves.push_back(resample_uniform(read_curve(f.string()), o.n));
      labels.push_back(f.stem().string());
    }
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (curves.size() < 2) {
    std::cerr << "error: need at least 2 curve files in " << dir << "\n";
    return 2;
  }
  for (const DiscreteCurve& c : curves) {
    if (c.closed != curves.front().closed) {
      std::cerr << "error: open and closed curves cannot be mixed\n";
      return 2;
    }
  }

  try {
    PairwiseConfig cfg;
    cfg.mode = o.exact ? DistanceMode::Exact : DistanceMode::Relaxed;
    cfg.threads = o.threads;
    cfg.exact = exact_config(o, curves.front().closed);
    cfg.exact.threads = 1;  // parallelism lives on the pair level here
    cfg.relaxed = relaxed_config(o, curves.front());
    cfg.relaxed.kernel.sigma_pos = 0.0;  // per-pair default below

    // scale-aware bandwidth per pair is impractical in a matrix; use the
    // collection-wide default unless the user pinned one
    double sigma = o.sigma_pos;
    if (sigma <= 0.0) {
      double diag = 0.0;
      for (const DiscreteCurve& c : curves)
        diag = std::max(diag, bounding_box_diagonal(c));
      sigma = 0.2 * diag;
    }
    cfg.relaxed.kernel.sigma_pos = sigma;

    const DistanceMatrix matrix = pairwise_distances(curves, labels, cfg);
    write_matrix_csv(out, matrix);
    const std::size_t pairs = curves.size() * (curves.size() - 1) / 2;
    for (const auto& [i, j] : matrix.failures)
      std::cerr << "pair (" << labels[i] << ", " << labels[j]
                << ") did not converge\n";
    const double ok = 1.0 - static_cast<double>(matrix.failures.size()) /
                                static_cast<double>(pairs);
    return ok >= 0.9 ? 0 : 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_mds(const std::string& matrix_path, int dim, const std::string& out,
            const std::string& svg, const std::string& labels_path,
            int silhouette_k, std::uint64_t seed) {
  try {
    const DistanceMatrix matrix = read_matrix_csv(matrix_path);
    const MdsResult mds = classical_mds(matrix, dim);
    if (mds.padded_columns > 0)
      std::cerr << "warning: non-Euclidean distances, " << mds.padded_columns
                << " embedding column(s) padded with zeros\n";
    write_embedding_csv(out, matrix.labels, mds.coords, dim);

    if (!svg.empty()) {
      std::vector<int> classes(matrix.size(), 0);
      if (!labels_path.empty()) {
        std::map<std::string, std::string> by_name;
        for (const auto& [name, cls] : read_labels_csv(labels_path))
          by_name[name] = cls;
        std::set<std::string> class_names;
        for (const auto& [name, cls] : by_name) class_names.insert(cls);
        std::map<std::string, int> index;
        for (const std::string& cls : class_names)
          index.emplace(cls, static_cast<int>(index.size()));
        for (int i = 0; i < matrix.size(); ++i) {
          const auto it = by_name.find(matrix.labels[i]);
          classes[i] = it == by_name.end() ? 0 : index[it->second];
        }
      }
      std::vector<std::pair<double, double>> pts(matrix.size());
      for (int i = 0; i < matrix.size(); ++i)
        pts[i] = {mds.at(i, dim, 0), dim > 1 ? mds.at(i, dim, 1) : 0.0};
      write_scatter_svg(svg, pts, classes);
    }

    if (silhouette_k > 0) {
      const KmeansResult km =
          kmeans(mds.coords, matrix.size(), dim, silhouette_k, 20, seed);
      print_value(silhouette(mds.coords, matrix.size(), dim, km.assignment,
                             silhouette_k));
    }
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

struct SynthOpts {
  std::string generator;
  std::string out = "shape.json";
  std::string out_dir;
  std::string labels_out;
  int count = 1;
  SynthParams params;
};

int cmd_synth(const SynthOpts& o) {
  try {
    if (o.count == 1 && o.out_dir.empty()) {
      write_curve_json(o.out, synth_shape(o.generator, o.params));
      return 0;
    }
    if (o.out_dir.empty()) {
      std::cerr << "error: --count > 1 needs --out-dir\n";
      return 2;
    }
    fs::create_directories(o.out_dir);
    std::vector<std::pair<std::string, std::string>> labels;
    for (int i = 0; i < o.count; ++i) {
      SynthParams p = o.params;
      p.seed = mix_seed(o.params.seed, static_cast<std::uint64_t>(i));
      char name[64];
      std::snprintf(name, sizeof(name), "%s_%03d", o.generator.c_str(), i);
      write_curve_json(o.out_dir + "/" + name + ".json", synth_shape(o.generator, p));
      labels.emplace_back(name, o.generator);
    }
    if (!o.labels_out.empty()) write_labels_csv(o.labels_out, labels);
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"elastic curve matching"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);

  MatchOpts match_opts;
  CLI::App* match = app.add_subcommand("match", "match one curve onto another");
  add_match_options(match, match_opts, true);
  match->add_option("--out", match_opts.out, "result JSON path");
  match->add_option("--svg", match_opts.svg, "overlay SVG path");

  MatchOpts geo_opts;
  int steps = 4;
  std::string geo_prefix = "geodesic";
  CLI::App* geo = app.add_subcommand("geodesic", "match, then sample the geodesic");
  add_match_options(geo, geo_opts, true);
  geo->add_option("--steps", steps, "number of snapshots")->check(CLI::Range(1, 64));
  geo->add_option("--out", geo_prefix, "output prefix (.json/.svg)");

  MatchOpts dm_opts;
  std::string dm_dir, dm_out = "distmat.csv";
  CLI::App* dm = app.add_subcommand("distmat", "pairwise distances over a directory");
  add_match_options(dm, dm_opts, false);
  dm->add_option("--dir", dm_dir, "directory of curve files")->required();
  dm->add_option("--out", dm_out, "matrix CSV path");

  std::string mds_matrix, mds_out = "embedding.csv", mds_svg, mds_labels;
  int mds_dim = 2, mds_sil = 0;
  std::uint64_t mds_seed = 0;
  CLI::App* mds = app.add_subcommand("mds", "classical MDS of a distance matrix");
  mds->add_option("--matrix", mds_matrix, "distance matrix CSV")->required();
  mds->add_option("--dim", mds_dim, "embedding dimension")->check(CLI::Range(1, 16));
  mds->add_option("--out", mds_out, "embedding CSV path");
  mds->add_option("--svg", mds_svg, "scatter SVG path");
  mds->add_option("--labels", mds_labels, "name,class CSV for coloring");
  mds->add_option("--silhouette", mds_sil, "print k-means silhouette for k clusters");
  mds->add_option("--seed", mds_seed, "random seed");

  SynthOpts synth_opts;
  CLI::App* synth = app.add_subcommand("synth", "generate synthetic curves");
  synth->add_option("generator", synth_opts.generator, "shape family")->required();
  synth->add_option("--out", synth_opts.out, "output file (count = 1)");
  synth->add_option("--out-dir", synth_opts.out_dir, "output directory");
  synth->add_option("--labels-out", synth_opts.labels_out, "write name,class CSV");
  synth->add_option("--count", synth_opts.count, "number of samples")
      ->check(CLI::Range(1, 100000));
  synth->add_option("--n", synth_opts.params.n, "vertex count");
  synth->add_option("--seed", synth_opts.params.seed, "random seed");
  synth->add_option("--jitter", synth_opts.params.jitter, "shape parameter jitter");
  synth->add_option("--noise", synth_opts.params.noise, "vertex noise amplitude");
  synth->add_option("--rotate", synth_opts.params.rotate, "rotation (radians)");
  synth->add_option("--eccentricity", synth_opts.params.eccentricity, "ellipse");
  synth->add_option("--width", synth_opts.params.width, "rounded-rectangle");
  synth->add_option("--height", synth_opts.params.height, "rounded-rectangle");
  synth->add_option("--corner", synth_opts.params.corner, "rounded-rectangle");
  synth->add_option("--neck", synth_opts.params.neck, "dumbbell");
  synth->add_option("--points", synth_opts.params.star_points, "star");
  synth->add_option("--amplitude", synth_opts.params.star_amplitude, "star");
  synth->add_option("--base", synth_opts.params.base, "appendage base shape");
  synth->add_option("--eps", synth_opts.params.eps, "appendage spike length");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (match->parsed()) return cmd_match(match_opts);
  if (geo->parsed()) return cmd_geodesic(geo_opts, steps, geo_prefix);
  if (dm->parsed()) return cmd_distmat(dm_opts, dm_dir, dm_out);
  if (mds->parsed())
    return cmd_mds(mds_matrix, mds_dim, mds_out, mds_svg, mds_labels, mds_sil,
                   mds_seed);
  if (synth->parsed()) return cmd_synth(synth_opts);
  return 2;
}

}  // namespace elastic::cli
