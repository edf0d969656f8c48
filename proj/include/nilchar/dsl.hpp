#ifndef NILCHAR_DSL_HPP
#define NILCHAR_DSL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilchar/lie_algebra.hpp"
#include "nilchar/subspace.hpp"

namespace nilchar {

struct NamedCharacter {
  std::string name;
  std::string subalgebra;
  CharacterFunctional lambda;
};

/// Parsed algebra file: the algebra plus its named subalgebras, characters and forms,
/// each list in declaration order.
struct AlgebraFile {
  LieAlgebra algebra;
  std::vector<std::pair<std::string, Subalgebra>> subalgebras;
  std::vector<NamedCharacter> characters;
  std::vector<std::pair<std::string, LinearForm>> forms;

  const Subalgebra& subalgebra(const std::string& name) const;
  const NamedCharacter& character(const std::string& name) const;
  const LinearForm& form(const std::string& name) const;
};

/// Line grammar:
///   algebra <name>
///   basis <id>+
///   bracket [<id>,<id>] = <lin-comb>
///   subalgebra <name> = <lin-comb> (; <lin-comb>)*
///   form <name>: <id>=<rat> (, <id>=<rat>)*
///   character <name> on <subalgebra>: <id>=<rat> (, <id>=<rat>)*
/// Character values are a form in the dual basis, restricted to the subalgebra.
/// Text after '#' is a comment.
AlgebraFile parse_algebra(std::string_view text);

/// Canonical text; parse_algebra(format_algebra(f)) reproduces f.
std::string format_algebra(const AlgebraFile& file);

/// "<lin-comb>; <lin-comb>; ..." over the basis of g (positions refer to line 1).
std::vector<QVector> parse_vector_list(const LieAlgebra& g, std::string_view text);
/// "<id>=<rat>, ..." over the basis of g.
LinearForm parse_form(const LieAlgebra& g, std::string_view text);

bool same_payload(const AlgebraFile& a, const AlgebraFile& b);

/// "example5", "heisenberg3" or "abelian:N". Throws MathError on unknown names.
AlgebraFile builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace nilchar

#endif
