#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elastic/analysis.hpp"
#include "elastic/curve.hpp"
#include "elastic/match_result.hpp"
#include "elastic/varifold.hpp"

namespace elastic::cli {

/// I/O failures (missing files, malformed content) all surface as IoError,
/// which commands map to exit code 1.
struct IoError : Error {
  using Error::Error;
};

/// Shortest round-trip decimal representation.
std::string format_double(double v);

const char* direction_kernel_name(DirectionKernel d);
DirectionKernel parse_direction_kernel(const std::string& name);

/// Curves are stored as {"points": [[x, y], ...], "closed": bool} JSON or as
/// two-column CSV (open curves only); the extension picks the format.
DiscreteCurve read_curve(const std::string& path);
void write_curve_json(const std::string& path, const DiscreteCurve& curve);
void write_curve_csv(const std::string& path, const DiscreteCurve& curve);

/// Configuration echoed into result files so a run can be re-evaluated.
struct MatchContext {
  double a = 1.0;
  double b = 0.5;
  double lambda = 20.0;
  int n = 100;
  bool exact = false;
  bool rotations = false;
  VarifoldKernel kernel;
};

void write_match_json(const std::string& path, const MatchResult& result,
                      const MatchContext& context);

struct MatchDocument {
  MatchResult result;
  MatchContext context;
};
MatchDocument read_match_json(const std::string& path);

void write_matrix_csv(const std::string& path, const DistanceMatrix& matrix);
DistanceMatrix read_matrix_csv(const std::string& path);

void write_embedding_csv(const std::string& path,
                         const std::vector<std::string>& labels,
                         const std::vector<double>& coords, int dim);

/// Lines of "name,class".
std::vector<std::pair<std::string, std::string>> read_labels_csv(
    const std::string& path);
void write_labels_csv(const std::string& path,
                      const std::vector<std::pair<std::string, std::string>>& rows);

}  // namespace elastic::cli
