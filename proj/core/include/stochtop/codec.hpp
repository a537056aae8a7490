#pragma once

#include <iosfwd>
#include <string>

#include "stochtop/complex.hpp"

namespace stochtop {

/// Text format: first non-comment line `n=<int>`, then one simplex per line as
/// whitespace-separated strictly increasing 0-based vertex ids. `#` starts a
/// comment. The complex is the face closure of the listed simplices.
SimplicialComplex parse_complex(std::istream& in, int dim_cap = SimplicialComplex::kNoCap);
SimplicialComplex parse_complex(const std::string& text, int dim_cap = SimplicialComplex::kNoCap);
SimplicialComplex read_complex_file(const std::string& path, int dim_cap = SimplicialComplex::kNoCap);

/// Writes the maximal simplices (enough to recover the closure).
void write_complex(std::ostream& out, const SimplicialComplex& x);
std::string format_complex(const SimplicialComplex& x);

}  // namespace stochtop
