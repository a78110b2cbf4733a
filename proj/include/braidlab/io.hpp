#pragma once

#include <string>

#include "braidlab/graded.hpp"
#include "braidlab/yd.hpp"

namespace braidlab {

// Input files are JSON with exact strings ("2/3", "zeta(8)^3"); integers may be bare numbers.
//   braiding: {"group": {"free_rank": 1, "torsion": [4]}, "exponents": [["2/3", ...], ...],
//              "degrees": [["1", 2], ...]}   free coordinates first, then torsion residues
//   or a bare braid matrix: {"q": [["zeta3", "1"], ...]}
//   lattice:  {"form": [["4"]], "basis": [["1"]]}
//   YD module over a rank-1 braiding: {"braiding": {...}, "degrees": [...], "action": [[...]],
//              "coaction": [[...]], "name": "..."}   coaction is the first component D
BraidedObject braided_object_from_json(const std::string& text);
std::string braided_object_to_json(const BraidedObject& x);
BraidMatrix braid_matrix_from_json(const std::string& text); // either form
Lattice lattice_from_json(const std::string& text);
std::string lattice_to_json(const Lattice& l);
YDModule yd_module_from_json(const std::string& text);
std::string yd_module_to_json(const YDModule& m);

std::string read_file(const std::string& path); // InvalidInput when unreadable

} // namespace braidlab
