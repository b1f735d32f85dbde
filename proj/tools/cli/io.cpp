#include "cli/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace elastic::cli {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

const char* direction_kernel_name(DirectionKernel d) {
  switch (d) {
    case DirectionKernel::Current:
      return "current";
    case DirectionKernel::Binet:
      return "binet";
    case DirectionKernel::OrientedGaussian:
      return "oriented-gaussian";
  }
  return "binet";
}

DirectionKernel parse_direction_kernel(const std::string& name) {
  if (name == "current") return DirectionKernel::Current;
  if (name == "binet") return DirectionKernel::Binet;
  if (name == "oriented-gaussian") return DirectionKernel::OrientedGaussian;
  throw IoError("unknown direction kernel: " + name);
}

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw IoError("malformed JSON in " + path + ": " + e.what());
  }
  return doc;
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

json curve_to_json(const DiscreteCurve& curve) {
  json points = json::array();
  for (const Complex& v : curve.vertices)
    points.push_back(json::array({v.real(), v.imag()}));
  return json{{"points", std::move(points)}, {"closed", curve.closed}};
}

DiscreteCurve curve_from_json(const json& doc, const std::string& path) {
  if (!doc.contains("points") || !doc["points"].is_array())
    throw IoError("curve file lacks a points array: " + path);
  DiscreteCurve curve;
  curve.closed = doc.value("closed", false);
  for (const json& p : doc["points"]) {
    if (!p.is_array() || p.size() != 2)
      throw IoError("curve points must be [x, y] pairs: " + path);
    curve.vertices.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  try {
    validate(curve);
  } catch (const Error& e) {
    throw IoError("invalid curve in " + path + ": " + e.what());
  }
  return curve;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

DiscreteCurve read_curve(const std::string& path) {
  if (has_suffix(path, ".csv")) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    DiscreteCurve curve;
    curve.closed = false;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      double x = 0.0, y = 0.0;
      char comma = ',';
      if (!(row >> x >> comma >> y))
        throw IoError("malformed CSV row in " + path + ": " + line);
      curve.vertices.emplace_back(x, y);
    }
    try {
      validate(curve);
    } catch (const Error& e) {
      throw IoError("invalid curve in " + path + ": " + e.what());
    }
    return curve;
  }
  return curve_from_json(load_json(path), path);
}

void write_curve_json(const std::string& path, const DiscreteCurve& curve) {
  save_text(path, curve_to_json(curve).dump(2) + "\n");
}

void write_curve_csv(const std::string& path, const DiscreteCurve& curve) {
  if (curve.closed) throw IoError("CSV curve files hold open curves only");
  std::string text;
  for (const Complex& v : curve.vertices)
    text += format_double(v.real()) + "," + format_double(v.imag()) + "\n";
  save_text(path, text);
}

void write_match_json(const std::string& path, const MatchResult& result,
                      const MatchContext& context) {
  json doc{
      {"a", context.a},
      {"b", context.b},
      {"lambda", context.lambda},
      {"n", context.n},
      {"exact", context.exact},
      {"rotations", context.rotations},
      {"kernel",
       {{"direction", direction_kernel_name(context.kernel.direction)},
        {"sigma_pos", context.kernel.sigma_pos},
        {"sigma_dir", context.kernel.sigma_dir}}},
      {"elastic_distance", result.elastic_distance},
      {"fidelity", result.fidelity},
      {"rotation", result.rotation},
      {"objective_value", result.objective_value},
      {"iterations", result.iterations},
      {"converged", result.converged},
      {"termination", to_string(result.termination)},
      {"end_curve", curve_to_json(result.end_curve)},
  };
  save_text(path, doc.dump(2) + "\n");
}

MatchDocument read_match_json(const std::string& path) {
  const json doc = load_json(path);
  MatchDocument out;
  out.context.a = doc.at("a").get<double>();
  out.context.b = doc.at("b").get<double>();
  out.context.lambda = doc.at("lambda").get<double>();
  out.context.n = doc.at("n").get<int>();
  out.context.exact = doc.at("exact").get<bool>();
  out.context.rotations = doc.at("rotations").get<bool>();
  out.context.kernel.direction =
      parse_direction_kernel(doc.at("kernel").at("direction").get<std::string>());
  out.context.kernel.sigma_pos = doc.at("kernel").at("sigma_pos").get<double>();
  out.context.kernel.sigma_dir = doc.at("kernel").at("sigma_dir").get<double>();
  out.result.elastic_distance = doc.at("elastic_distance").get<double>();
  out.result.fidelity = doc.at("fidelity").get<double>();
  out.result.rotation = doc.at("rotation").get<double>();
  out.result.objective_value = doc.at("objective_value").get<double>();
  out.result.iterations = doc.at("iterations").get<int>();
  out.result.converged = doc.at("converged").get<bool>();
  const std::string term = doc.at("termination").get<std::string>();
  out.result.termination = term == "gradient_tol" ? Termination::GradientTol
                           : term == "max_iter"   ? Termination::MaxIter
                                                  : Termination::LineSearchFailure;
  out.result.end_curve = curve_from_json(doc.at("end_curve"), path);
  return out;
}

void write_matrix_csv(const std::string& path, const DistanceMatrix& matrix) {
  std::string text;
  const int n = matrix.size();
  for (int j = 0; j < n; ++j) {
    if (j) text += ",";
    text += matrix.labels[j];
  }
  text += "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) text += ",";
      text += format_double(matrix.at(i, j));
    }
    text += "\n";
  }
  save_text(path, text);
}

DistanceMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty matrix file: " + path);

  DistanceMatrix matrix;
  std::istringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) matrix.labels.push_back(cell);
  const int n = matrix.size();
  matrix.values.reserve(static_cast<std::size_t>(n) * n);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) {
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (res.ec != std::errc())
        throw IoError("malformed matrix entry in " + path + ": " + cell);
      matrix.values.push_back(v);
    }
  }
  if (static_cast<int>(matrix.values.size()) != n * n)
    throw IoError("matrix is not n x n in " + path);
  return matrix;
}

void write_embedding_csv(const std::string& path,
                         const std::vector<std::string>& labels,
                         const std::vector<double>& coords, int dim) {
  std::string text;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    text += labels[i];
    for (int k = 0; k < dim; ++k)
      text += "," + format_double(coords[i * dim + k]);
    text += "\n";
  }
  save_text(path, text);
}

std::vector<std::pair<std::string, std::string>> read_labels_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw IoError("labels rows must be name,class: " + line);
    rows.emplace_back(line.substr(0, comma), line.substr(comma + 1));
  }
  return rows;
}

void write_labels_csv(const std::string& path,
                      const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string text;
  for (const auto& [name, cls] : rows) text += name + "," + cls + "\n";
  save_text(path, text);
}

}  // namespace elastic::cli
