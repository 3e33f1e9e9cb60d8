#pragma once

// Writes generated instances as diagram files.

#include <string>

#include "abelcat/diagram.hpp"
#include "abelcat/fgab.hpp"

namespace abelcat::cli {

/// Objects A, B, C, A_prime, B_prime, C_prime; a short_five assertion in
/// `mode`, plus short_five_trace in monic mode.
std::string ladder_document(const SesLadder<fgab::GroupHom>& l, ShortFiveMode mode);

/// Objects A1..C3 and a nine_lemma assertion in `direction`.
std::string grid_document(const NineGrid<fgab::GroupHom>& grid, NineDirection direction);

}  // namespace abelcat::cli
