#pragma once

#include <string>

#include "krein/dilation.hpp"
#include "krein/invariant.hpp"
#include "krein/star_algebra.hpp"

namespace krein {

// JSON conventions shared by all file formats: complex scalars are [re, im]
// pairs, matrices are row-major nested arrays of such pairs.
//
// kernel:   { "space": {"dim": d, "J": matrix}, "points": [labels],
//             "blocks": {"x,y": matrix, ...} }   omitted blocks are zero;
//             the hermitian closure is validated, never inferred.
// action:   { "semigroup": {"elements": [...], "mult": [[...]], "unit": i,
//             "inv": [...]}, "phi": [[...]], "alpha": [[[re,im],...]] }
// algebra:  { "dim": d, "structure": d x d x d tensor with structure[i][j][m]
//             the coefficient of b_m in b_i b_j, "unit": [..], "involution":
//             matrix }  or the shorthands {"matrix_units": k} /
//             {"cyclic_group": n}.
// gns:      { "algebra": <algebra>, "functional": {"values": [..]} }
// map:      { "k": k, "h": h, "blocks": {"i,j": matrix} }   1-based indices,
//             omitted blocks are zero; hermitian-ness is validated.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

HermitianKernel parse_kernel_json(const std::string& text);
HermitianKernel read_kernel_file(const std::string& path);
std::string kernel_to_json(const HermitianKernel& k);

ActionSystem parse_action_json(const std::string& text);
ActionSystem read_action_file(const std::string& path);

StarAlgebra parse_algebra_json(const std::string& text);
HermitianFunctional parse_gns_input_json(const std::string& text);
HermitianFunctional read_gns_input_file(const std::string& path);

HermitianMap parse_map_json(const std::string& text);
HermitianMap read_map_file(const std::string& path);

}  // namespace krein
