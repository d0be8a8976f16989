#include "alp/liealg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace alp::liealg {

namespace {

void check_dim(const LieAlgebraSpec& spec, const Vec& v, const char* what) {
  if (v.size() != spec.dim)
    throw std::invalid_argument(std::string("liealg: dimension mismatch in ") + what);
}

}  // namespace

Mat LieAlgebraSpec::algebra_matrix(const Vec& xi) const {
  if (!has_rep()) throw std::logic_error("liealg: spec '" + name + "' has no matrix representation");
  Mat m = Mat::Zero(generators[0].rows(), generators[0].cols());
  for (int a = 0; a < dim; ++a) m += xi[a] * generators[a];
  return m;
}

Vec LieAlgebraSpec::coords_of(const Mat& m) const {
  Eigen::Map<const Vec> v(m.data(), m.size());
  return gen_pinv * v;
}

void LieAlgebraSpec::finalize() {
  if (static_cast<int>(C.size()) != dim * dim * dim)
    throw std::invalid_argument("liealg: structure constant array size mismatch");
  if (k.rows() != dim || k.cols() != dim)
    throw std::invalid_argument("liealg: inner product size mismatch");
  if (has_rep()) {
    const auto rows = generators[0].rows(), cols = generators[0].cols();
    Mat basis(rows * cols, dim);
    for (int a = 0; a < dim; ++a) {
      if (generators[a].rows() != rows || generators[a].cols() != cols)
        throw std::invalid_argument("liealg: generator shape mismatch");
      basis.col(a) = Eigen::Map<const Vec>(generators[a].data(), rows * cols);
    }
    gen_pinv = (basis.transpose() * basis).ldlt().solve(basis.transpose());
  }
}

LieAlgebraSpec LieAlgebraSpec::u1() {
  LieAlgebraSpec s;
  s.name = "u1";
  s.dim = 1;
  s.C.assign(1, 0.0);
  s.k = Mat::Identity(1, 1);
  Mat J(2, 2);
  J << 0, -1, 1, 0;
  s.generators = {J};
  s.finalize();
  return s;
}

LieAlgebraSpec LieAlgebraSpec::so3() {
  LieAlgebraSpec s;
  s.name = "so3";
  s.dim = 3;
  s.C.assign(27, 0.0);
  // C^a_{bc} = epsilon_{abc}
  s.set_c(0, 1, 2, 1.0);
  s.set_c(0, 2, 1, -1.0);
  s.set_c(1, 2, 0, 1.0);
  s.set_c(1, 0, 2, -1.0);
  s.set_c(2, 0, 1, 1.0);
  s.set_c(2, 1, 0, -1.0);
  s.k = Mat::Identity(3, 3);
  auto hat = [](int a) {
    Mat m = Mat::Zero(3, 3);
    int b = (a + 1) % 3, c = (a + 2) % 3;
    m(c, b) = 1.0;
    m(b, c) = -1.0;
    return m;
  };
  s.generators = {hat(0), hat(1), hat(2)};
  s.finalize();
  return s;
}

LieAlgebraSpec LieAlgebraSpec::product(const LieAlgebraSpec& a, const LieAlgebraSpec& b) {
  LieAlgebraSpec s;
  s.name = a.name + "x" + b.name;
  s.dim = a.dim + b.dim;
  s.C.assign(static_cast<size_t>(s.dim) * s.dim * s.dim, 0.0);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int l = 0; l < a.dim; ++l) s.set_c(i, j, l, a.c(i, j, l));
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int l = 0; l < b.dim; ++l) s.set_c(a.dim + i, a.dim + j, a.dim + l, b.c(i, j, l));
  s.k = Mat::Zero(s.dim, s.dim);
  s.k.topLeftCorner(a.dim, a.dim) = a.k;
  s.k.bottomRightCorner(b.dim, b.dim) = b.k;
  if (a.has_rep() && b.has_rep()) {
    // block-diagonal representation
    const auto ra = a.generators[0].rows(), rb = b.generators[0].rows();
    for (int i = 0; i < a.dim; ++i) {
      Mat g = Mat::Zero(ra + rb, ra + rb);
      g.topLeftCorner(ra, ra) = a.generators[i];
      s.generators.push_back(g);
    }
    for (int i = 0; i < b.dim; ++i) {
      Mat g = Mat::Zero(ra + rb, ra + rb);
      g.bottomRightCorner(rb, rb) = b.generators[i];
      s.generators.push_back(g);
    }
  }
  s.finalize();
  return s;
}

LieAlgebraSpec LieAlgebraSpec::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("liealg: cannot open " + path.string());
  LieAlgebraSpec s;
  bool k_identity = false;
  std::vector<std::array<double, 4>> c_entries, k_entries;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "name") {
      ls >> s.name;
    } else if (key == "dim") {
      ls >> s.dim;
    } else if (key == "c") {
      int a, b, cc;
      double v;
      if (!(ls >> a >> b >> cc >> v)) throw std::runtime_error("liealg: bad 'c' line");
      c_entries.push_back({double(a), double(b), double(cc), v});
    } else if (key == "k") {
      std::string first;
      ls >> first;
      if (first == "identity") {
        k_identity = true;
      } else {
        int i = std::stoi(first), j;
        double v;
        if (!(ls >> j >> v)) throw std::runtime_error("liealg: bad 'k' line");
        k_entries.push_back({double(i), double(j), v, 0});
      }
    } else {
      throw std::runtime_error("liealg: unknown key '" + key + "' in " + path.string());
    }
  }
  if (s.dim <= 0) throw std::runtime_error("liealg: missing or invalid dim");
  s.C.assign(static_cast<size_t>(s.dim) * s.dim * s.dim, 0.0);
  auto in_range = [&](double x) { return x >= 0 && x < s.dim; };
  for (auto& e : c_entries) {
    if (!in_range(e[0]) || !in_range(e[1]) || !in_range(e[2]))
      throw std::runtime_error("liealg: structure constant index out of range");
    // antisymmetric completion: setting C^a_{bc} also sets C^a_{cb} = -v
    s.set_c(int(e[0]), int(e[1]), int(e[2]), e[3]);
    s.set_c(int(e[0]), int(e[2]), int(e[1]), -e[3]);
  }
  s.k = Mat::Identity(s.dim, s.dim);
  if (!k_identity) {
    if (!k_entries.empty()) {
      s.k = Mat::Zero(s.dim, s.dim);
      for (auto& e : k_entries) {
        s.k(int(e[0]), int(e[1])) = e[2];
        s.k(int(e[1]), int(e[0])) = e[2];
      }
    }
  }
  s.finalize();
  return s;
}

Vec lie_bracket(const LieAlgebraSpec& spec, const Vec& xi, const Vec& eta) {
  check_dim(spec, xi, "lie_bracket");
  check_dim(spec, eta, "lie_bracket");
  Vec out = Vec::Zero(spec.dim);
  for (int a = 0; a < spec.dim; ++a) {
    double s = 0;
    for (int b = 0; b < spec.dim; ++b)
      for (int c = 0; c < spec.dim; ++c) s += spec.c(a, b, c) * xi[b] * eta[c];
    out[a] = s;
  }
  return out;
}

Mat ad_matrix(const LieAlgebraSpec& spec, const Vec& xi) {
  check_dim(spec, xi, "ad_matrix");
  Mat m = Mat::Zero(spec.dim, spec.dim);
  for (int a = 0; a < spec.dim; ++a)
    for (int c = 0; c < spec.dim; ++c) {
      double s = 0;
      for (int b = 0; b < spec.dim; ++b) s += spec.c(a, b, c) * xi[b];
      m(a, c) = s;
    }
  return m;
}

Vec ad_star(const LieAlgebraSpec& spec, const Vec& xi, const Vec& mu) {
  check_dim(spec, xi, "ad_star");
  check_dim(spec, mu, "ad_star");
  return ad_matrix(spec, xi).transpose() * mu;
}

Mat expm(const Mat& m) {
  const double nrm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf norm
  int squarings = 0;
  Mat a = m;
  if (nrm > 0.5) {
    squarings = std::max(0, int(std::ceil(std::log2(nrm / 0.5))));
    a /= std::pow(2.0, squarings);
  }
  Mat result = Mat::Identity(m.rows(), m.cols());
  Mat term = result;
  for (int n = 1; n <= 30; ++n) {
    term = (term * a) / double(n);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-17 * std::max(1.0, result.cwiseAbs().maxCoeff())) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

GroupElement group_exp(const LieAlgebraSpec& spec, const Vec& xi) {
  check_dim(spec, xi, "group_exp");
  return {expm(spec.algebra_matrix(xi)), &spec};
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  return {g.matrix * h.matrix, g.spec};
}

GroupElement group_inv(const GroupElement& g) {
  return {g.matrix.inverse(), g.spec};
}

Vec Ad(const GroupElement& g, const Vec& xi) {
  const auto& spec = *g.spec;
  check_dim(spec, xi, "Ad");
  Mat conj = g.matrix * spec.algebra_matrix(xi) * g.matrix.inverse();
  return spec.coords_of(conj);
}

Mat Ad_matrix(const GroupElement& g) {
  const auto& spec = *g.spec;
  Mat m(spec.dim, spec.dim);
  Mat ginv = g.matrix.inverse();
  for (int b = 0; b < spec.dim; ++b) m.col(b) = spec.coords_of(g.matrix * spec.generators[b] * ginv);
  return m;
}

Vec Ad_star(const GroupElement& g, const Vec& mu) {
  return Ad_matrix(g).transpose() * mu;
}

ValidationReport validate_spec(const LieAlgebraSpec& spec) {
  ValidationReport r;
  const int n = spec.dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        r.antisymmetry = std::max(r.antisymmetry, std::abs(spec.c(a, b, c) + spec.c(a, c, b)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double s = 0;
          for (int e = 0; e < n; ++e)
            s += spec.c(e, b, c) * spec.c(a, e, d) + spec.c(e, c, d) * spec.c(a, e, b) +
                 spec.c(e, d, b) * spec.c(a, e, c);
          r.jacobi = std::max(r.jacobi, std::abs(s));
        }
  // k([e_a,e_b],e_c) + k(e_b,[e_a,e_c]) = 0
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double s = 0;
        for (int d = 0; d < n; ++d) s += spec.c(d, a, b) * spec.k(d, c) + spec.c(d, a, c) * spec.k(b, d);
        r.k_invariance = std::max(r.k_invariance, std::abs(s));
      }
  if (spec.has_rep()) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Mat comm = spec.generators[b] * spec.generators[c] - spec.generators[c] * spec.generators[b];
        for (int a = 0; a < n; ++a) comm -= spec.c(a, b, c) * spec.generators[a];
        r.rep_bracket = std::max(r.rep_bracket, comm.cwiseAbs().maxCoeff());
      }
  }
  return r;
}

}  // namespace alp::liealg
