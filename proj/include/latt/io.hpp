#ifndef LATT_IO_HPP
#define LATT_IO_HPP

#include <string>

#include "latt/gram.hpp"

namespace latt {

// Gram matrix file format: {"rank": n, "gram": [[...]]} with exact integers,
// row-major. The reader revalidates symmetry and positive definiteness.
std::string gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const std::string& text);

// Resolve a lattice argument: "glue:<notation>", a catalog name, or a path
// to a Gram JSON file.
GramMatrix load_lattice_arg(const std::string& arg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace latt

#endif
