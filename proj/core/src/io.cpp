#include "krein/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace krein {

namespace {

using nlohmann::json;

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to(const Complex& z) { return json::array({z.real(), z.imag()}); }

Matrix matrix_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a matrix (nested array)");
  const Index rows = static_cast<Index>(j.size());
  if (rows == 0) return Matrix(0, 0);
  const Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (static_cast<Index>(j[static_cast<std::size_t>(r)].size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = complex_from(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

json matrix_to(const Matrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Vector vector_from(const json& j) {
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = complex_from(j[static_cast<std::size_t>(i)]);
  return v;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, true, true);  // allow comments
  return j;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

HermitianKernel parse_kernel_json(const std::string& text) {
  const json j = parse(text);
  const json& jspace = j.at("space");
  const Index dim = jspace.at("dim").get<Index>();
  const Matrix jm = matrix_from(jspace.at("J"));
  if (jm.rows() != dim) throw std::invalid_argument("kernel: J size != dim");
  const KreinSpace space = KreinSpace::make(jm);

  std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
  for (const std::string& p : points)
    if (p.find(',') != std::string::npos)
      throw std::invalid_argument("kernel: point labels must not contain commas");

  const Index n = static_cast<Index>(points.size());
  std::vector<Matrix> blocks(static_cast<std::size_t>(n * n), Matrix::Zero(dim, dim));
  if (j.contains("blocks")) {
    for (const auto& [key, value] : j.at("blocks").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("kernel: block key must be \"x,y\"");
      const std::string x = key.substr(0, comma);
      const std::string y = key.substr(comma + 1);
      const auto find = [&points](const std::string& label) {
        for (std::size_t i = 0; i < points.size(); ++i)
          if (points[i] == label) return static_cast<Index>(i);
        throw std::invalid_argument("kernel: unknown point label '" + label + "'");
      };
      blocks[static_cast<std::size_t>(find(x) * n + find(y))] = matrix_from(value);
    }
  }
  return HermitianKernel::make(space, std::move(points), std::move(blocks));
}

HermitianKernel read_kernel_file(const std::string& path) {
  return parse_kernel_json(read_text_file(path));
}

std::string kernel_to_json(const HermitianKernel& k) {
  json j;
  j["space"]["dim"] = k.dim();
  j["space"]["J"] = matrix_to(k.H.J);
  j["points"] = k.points;
  json blocks = json::object();
  for (Index x = 0; x < k.n(); ++x)
    for (Index y = 0; y < k.n(); ++y) {
      if (spectral_norm(k.block(x, y)) == 0.0) continue;
      blocks[k.points[static_cast<std::size_t>(x)] + "," +
             k.points[static_cast<std::size_t>(y)]] = matrix_to(k.block(x, y));
    }
  j["blocks"] = std::move(blocks);
  return j.dump(2);
}

ActionSystem parse_action_json(const std::string& text) {
  const json j = parse(text);
  const json& js = j.at("semigroup");
  InvolutiveSemigroup s;
  s.names = js.at("elements").get<std::vector<std::string>>();
  const int size = static_cast<int>(s.names.size());
  s.mult.resize(size, size);
  const json& jm = js.at("mult");
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      s.mult(a, b) = jm.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)).get<int>();
  s.unit = js.at("unit").get<int>();
  s.inv = js.at("inv").get<std::vector<int>>();
  s.validate();

  const json& jphi = j.at("phi");
  const json& jalpha = j.at("alpha");
  const Index n = static_cast<Index>(jphi.at(0).size());
  ActionSystem action;
  action.S = std::move(s);
  action.n_points = n;
  action.phi.resize(size, n);
  action.alpha.resize(size, n);
  for (int a = 0; a < size; ++a)
    for (Index x = 0; x < n; ++x) {
      action.phi(a, x) =
          jphi.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(x)).get<int>();
      action.alpha(a, x) =
          complex_from(jalpha.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(x)));
    }
  return action;
}

ActionSystem read_action_file(const std::string& path) {
  return parse_action_json(read_text_file(path));
}

namespace {

StarAlgebra algebra_from(const json& j) {
  if (j.contains("matrix_units")) return StarAlgebra::matrix_algebra(j.at("matrix_units").get<int>());
  if (j.contains("cyclic_group"))
    return StarAlgebra::group_algebra(InvolutiveSemigroup::cyclic_group(j.at("cyclic_group").get<int>()));

  StarAlgebra a;
  a.d = j.at("dim").get<Index>();
  if (j.contains("names"))
    a.names = j.at("names").get<std::vector<std::string>>();
  else
    for (Index i = 0; i < a.d; ++i) a.names.push_back("b" + std::to_string(i));

  const json& js = j.at("structure");
  a.lmul.assign(static_cast<std::size_t>(a.d), Matrix::Zero(a.d, a.d));
  for (Index i = 0; i < a.d; ++i)
    for (Index p = 0; p < a.d; ++p) {
      const Vector coords = vector_from(js.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(p)));
      if (coords.size() != a.d) throw std::invalid_argument("algebra: structure tensor ragged");
      for (Index m = 0; m < a.d; ++m) a.lmul[static_cast<std::size_t>(i)](m, p) = coords(m);
    }
  a.unit = vector_from(j.at("unit"));
  a.invol = matrix_from(j.at("involution"));
  a.validate();
  return a;
}

}  // namespace

StarAlgebra parse_algebra_json(const std::string& text) { return algebra_from(parse(text)); }

HermitianFunctional parse_gns_input_json(const std::string& text) {
  const json j = parse(text);
  StarAlgebra algebra = algebra_from(j.at("algebra"));
  const Vector values = vector_from(j.at("functional").at("values"));
  return HermitianFunctional::make(std::move(algebra), values);
}

HermitianFunctional read_gns_input_file(const std::string& path) {
  return parse_gns_input_json(read_text_file(path));
}

HermitianMap parse_map_json(const std::string& text) {
  const json j = parse(text);
  const int k = j.at("k").get<int>();
  const int h = j.at("h").get<int>();
  std::vector<Matrix> blocks(static_cast<std::size_t>(k) * k, Matrix::Zero(h, h));
  if (j.contains("blocks")) {
    for (const auto& [key, value] : j.at("blocks").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("map: block key must be \"i,j\" (1-based)");
      const int i = std::stoi(key.substr(0, comma));
      const int jj = std::stoi(key.substr(comma + 1));
      if (i < 1 || i > k || jj < 1 || jj > k)
        throw std::invalid_argument("map: block index out of range");
      blocks[static_cast<std::size_t>(i - 1) * k + (jj - 1)] = matrix_from(value);
    }
  }
  return HermitianMap::make(k, h, std::move(blocks));
}

HermitianMap read_map_file(const std::string& path) {
  return parse_map_json(read_text_file(path));
}

}  // namespace krein
