#include "alp/snapshot.hpp"

#include <bit>
#include <fstream>

namespace alp::io {

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian; convert before writing elsewhere");

void write_field(const std::filesystem::path& dir, const std::string& name,
                 const fields::Field& f, int algebra_dim) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream bin(dir / (name + ".f64"), std::ios::binary);
    bin.write(reinterpret_cast<const char*>(f.raw().data()),
              std::streamsize(f.raw().size() * sizeof(double)));
  }
  const auto& g = f.grid();
  std::ofstream meta(dir / (name + ".meta"));
  meta << "field " << name << "\n";
  meta << "dim " << g.dim << "\n";
  meta << "shape " << g.shape[0] << " " << g.shape[1] << " " << g.shape[2] << "\n";
  meta << "lengths " << g.lengths[0] << " " << g.lengths[1] << " " << g.lengths[2] << "\n";
  meta << "components " << f.ncomp() << "\n";
  meta << "algebra_dim " << algebra_dim << "\n";
  meta << "order component_major_z_fastest float64_le\n";
}

fields::Field read_field(const std::filesystem::path& dir, const std::string& name,
                         const fields::Grid& g) {
  std::ifstream meta(dir / (name + ".meta"));
  if (!meta) throw std::runtime_error("snapshot: missing meta for " + name);
  int ncomp = -1;
  std::string key;
  while (meta >> key) {
    if (key == "components") {
      meta >> ncomp;
    } else {
      std::string rest;
      std::getline(meta, rest);
    }
  }
  if (ncomp <= 0) throw std::runtime_error("snapshot: bad meta for " + name);
  fields::Field f(g, ncomp);
  std::ifstream bin(dir / (name + ".f64"), std::ios::binary);
  if (!bin) throw std::runtime_error("snapshot: missing data for " + name);
  bin.read(reinterpret_cast<char*>(f.raw().data()),
           std::streamsize(f.raw().size() * sizeof(double)));
  if (bin.gcount() != std::streamsize(f.raw().size() * sizeof(double)))
    throw std::runtime_error("snapshot: truncated data for " + name);
  return f;
}

void write_state(const std::filesystem::path& dir, const std::string& prefix,
                 const models::FluidState& st) {
  const int adim = st.alg ? st.alg->dim : 1;
  write_field(dir, prefix + "_m", st.m, 1);
  write_field(dir, prefix + "_rho", st.rho, 1);
  write_field(dir, prefix + "_S", st.S, 1);
  if (st.kappa) write_field(dir, prefix + "_kappa", *st.kappa, adim);
  if (st.gamma) write_field(dir, prefix + "_gamma", *st.gamma, adim);
  if (st.v_s) write_field(dir, prefix + "_vs", *st.v_s, 1);
  if (st.A) write_field(dir, prefix + "_A", *st.A, 1);
  if (st.n) write_field(dir, prefix + "_n", *st.n, 1);
}

}  // namespace alp::io
