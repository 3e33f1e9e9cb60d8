#pragma once

// Diagram files: a category, named objects, named morphisms with matrices,
// and an ordered list of assertions. The grammar is documented in
// docs/diagram-format.md.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelcat/cli/json_subset.hpp"
#include "abelcat/intlin.hpp"
#include "abelcat/report.hpp"

namespace abelcat::cli {

enum class CategoryTag { Fgab, Vecfp };

struct ObjectDecl {
  std::string name;
  std::vector<intlin::BigInt> factors;  // fgab
  std::size_t dim = 0;                  // vecfp
  SourcePos pos;
};

struct MorphismDecl {
  std::string name;
  std::string src;
  std::string dst;
  std::vector<std::vector<intlin::BigInt>> rows;
  std::vector<std::vector<SourcePos>> entry_pos;
  SourcePos pos;
  SourcePos matrix_pos;
};

enum class AssertionKind { Commutes, ExactAt, ShortExact, ShortFive, ShortFiveTrace, NineLemma };

std::string_view to_string(AssertionKind k);

struct AssertionDecl {
  AssertionKind kind = AssertionKind::Commutes;
  /// Morphism names. For short_five(_trace) the order is f, g, f′, g′, α,
  /// β, γ; for nine_lemma f1, g1, f2, g2, f3, g3, α1, α2, β1, β2, γ1, γ2.
  std::vector<std::string> args;
  ShortFiveMode mode = ShortFiveMode::Monic;
  NineDirection direction = NineDirection::BottomFromTop;
  SourcePos pos;
};

struct DiagramFile {
  CategoryTag category = CategoryTag::Fgab;
  std::uint64_t prime = 0;  // vecfp only
  std::vector<ObjectDecl> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<AssertionDecl> assertions;

  const ObjectDecl& object(std::string_view name) const;
  const MorphismDecl& morphism(std::string_view name) const;
};

/// Named argument keys in positional order.
const std::vector<std::string>& ladder_keys();
const std::vector<std::string>& grid_keys();

/// Syntax, structure, reference and shape checks. Throws LocatedError.
DiagramFile parse_diagram_file(std::string_view text);

}  // namespace abelcat::cli
