#pragma once

#include <iosfwd>

#include "hopf/catalog.hpp"

namespace hopf::hzf {

// HZF: JSON-shaped text format for basis-indexed structure constants.
// Serialization is canonical (sorted keys, basis-declaration order for
// entries, canonical scalar literals) and byte-stable.

std::string algebra_to_text(const HopfData& H, const std::string& rule_name = "");
HopfPtr algebra_from_text(const std::string& text);
HopfPtr load_algebra(const std::string& path);
void save_algebra(const std::string& path, const HopfData& H, const std::string& rule_name = "");

// Bilinear form block: { "left": name, "right": name,
//   "entries": [[i, j, literal] ...], "default": "zero"|"counit-product",
//   "rule": optional }.
std::string form_to_text(const BilinearForm& form);
BilinearForm form_from_text(const std::string& text, HopfPtr left, HopfPtr right);
BilinearForm load_form(const std::string& path, HopfPtr left, HopfPtr right);
void save_form(const std::string& path, const BilinearForm& form);

// Extending datum block with inline base/hpart algebras:
// { "base": {...hzf...}, "hpart": {...hzf...}, "lact": entries,
//   "ract": entries, "cocycle": entries }.
std::string datum_to_text(const ExtendingDatum& omega);
DatumPtr datum_from_text(const std::string& text);
DatumPtr load_datum(const std::string& path);
void save_datum(const std::string& path, const ExtendingDatum& omega);

// Product file: the built algebra plus provenance and the embedded datum, so
// loading rebuilds (and revalidates) the product.
void save_product(const std::string& path, const ProductAlgebra& prod);
ProductPtr load_product(const std::string& path);

// Quadruple file: {"p": block, "tau": block, "u": block, "v": block} over
// the product's component algebras.
std::string quad_to_text(const Quadruple& quad);
Quadruple quad_from_text(const std::string& text, const ProductAlgebra& prod);
Quadruple load_quad(const std::string& path, const ProductAlgebra& prod);
void save_quad(const std::string& path, const Quadruple& quad);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hopf::hzf
