#include "cwf/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "cwf/lie_core.hpp"

namespace cwf {
namespace {

constexpr char kMagic[4] = {'C', 'W', 'F', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw std::runtime_error("truncated form dump");
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& os, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i)
    b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw std::runtime_error("truncated form dump");
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

}  // namespace

void write_form(const GridForm& w, std::ostream& os) {
  const TorusGrid& g = w.grid();
  os.write(kMagic, 4);
  put_u32(os, static_cast<std::uint32_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a)
    put_u32(os, static_cast<std::uint32_t>(g.extent(a)));
  put_u32(os, static_cast<std::uint32_t>(g.mode()));
  put_u32(os, w.is_lie() ? 1u : 0u);
  put_u32(os, w.is_lie()
                  ? static_cast<std::uint32_t>(w.algebra().tag)
                  : 0u);
  put_u32(os, w.is_lie() ? static_cast<std::uint32_t>(w.algebra().k) : 1u);
  put_u32(os, static_cast<std::uint32_t>(w.degree()));
  const cplx* p = w.data();
  for (std::size_t i = 0; i < w.size(); ++i) {
    put_f64(os, p[i].real());
    put_f64(os, p[i].imag());
  }
  if (!os) throw std::runtime_error("write failed");
}

LoadedForm read_form(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not a form dump (bad magic)");
  const int dim = static_cast<int>(get_u32(is));
  if (dim < 1 || dim > 4) throw std::runtime_error("bad dimension");
  std::vector<int> extents(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a)
    extents[static_cast<std::size_t>(a)] = static_cast<int>(get_u32(is));
  const std::uint32_t mode = get_u32(is);
  if (mode > 1) throw std::runtime_error("bad mode");
  auto g = std::make_shared<TorusGrid>(extents, static_cast<DiffMode>(mode));

  const std::uint32_t kind = get_u32(is);
  const std::uint32_t tag = get_u32(is);
  const std::uint32_t k = get_u32(is);
  const int degree = static_cast<int>(get_u32(is));
  if (kind > 1 || tag > 2 || degree < 0 || degree > dim)
    throw std::runtime_error("bad header");

  GridForm w = [&] {
    if (kind == 0) return GridForm::scalar(*g, degree);
    Algebra alg{static_cast<AlgebraTag>(tag), static_cast<int>(k)};
    return GridForm::lie(*g, alg, degree);
  }();
  cplx* p = w.data();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double re = get_f64(is);
    const double im = get_f64(is);
    p[i] = cplx(re, im);
  }
  return LoadedForm{std::move(g), std::move(w)};
}

void write_form_file(const GridForm& w, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path);
  write_form(w, os);
}

LoadedForm read_form_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_form(is);
}

}  // namespace cwf
