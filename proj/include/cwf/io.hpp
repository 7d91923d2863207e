#pragma once
// Binary dump of grid forms for golden-file tests and report attachments.
//
// Layout (little-endian):
//   magic "CWF1"
//   u32 dim, u32 extent[dim], u32 mode (0 fd4, 1 spectral)
//   u32 kind (0 scalar, 1 lie), u32 algebra tag, u32 matrix size k
//   u32 degree
//   f64 payload: components in grid order, per component row-major sites,
//   per site row-major k x k blocks, each entry as (re, im)

#include <iosfwd>
#include <memory>
#include <string>

#include "cwf/torus_forms.hpp"

namespace cwf {

// a form bundled with the grid it lives on (forms reference, not own, grids)
struct LoadedForm {
  std::shared_ptr<TorusGrid> grid;
  GridForm form;
};

void write_form(const GridForm& w, std::ostream& os);
LoadedForm read_form(std::istream& is);

void write_form_file(const GridForm& w, const std::string& path);
LoadedForm read_form_file(const std::string& path);

}  // namespace cwf
