#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "centlab/group.hpp"

namespace centlab {

/// Expression tree over the group constructors.
///
/// Grammar (ASCII):
///   expr    := semi { 'x' semi }            direct product, left-assoc
///   semi    := atom [ ':' atom ]            semidirect; both sides must be
///                                           cyclic atoms of prime order,
///                                           left factor normal
///   atom    := 'Z' int | 'D' int | 'S' int | 'A' int | 'Q8'
///            | 'PGL(2,' int ')' | 'file:' path | '(' expr ')'
/// 'D' takes the group ORDER (D10 has order 10). ':' binds tighter than
/// 'x'. Whitespace is allowed between tokens; a file path ends at
/// whitespace, '(' or ')'.
struct GroupSpec {
  enum class Kind {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Quaternion8,
    DirectProduct,
    SemidirectCyclic,
    PGL2,
    FromFile,
  };

  Kind kind = Kind::Cyclic;
  int a = 0;  // primary parameter (n, 2n, degree, p, q of PGL)
  int b = 0;  // second parameter (q of the semidirect action)
  std::string path;
  std::vector<GroupSpec> parts;  // DirectProduct factors (exactly two)

  std::string render() const;
};

/// Parses the grammar above; throws ParseError with the failing position.
GroupSpec parse_spec(std::string_view text);

/// Evaluates the tree with the group constructors. Constructor errors
/// (InvalidParameter, CapExceeded, NotAGroup) propagate.
FiniteGroup realize(const GroupSpec& spec, const Limits& lim = {});

/// Reads a Cayley-table file: line 1 is n, then n rows of n 0-based
/// indices, row a column b holding a*b. Validated like any untrusted table.
FiniteGroup load_cayley_file(const std::string& path, const Limits& lim = {});

}  // namespace centlab
