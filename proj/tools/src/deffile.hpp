#ifndef GLACALC_TOOLS_DEFFILE_HPP
#define GLACALC_TOOLS_DEFFILE_HPP

#include <string>
#include <utility>
#include <vector>

#include "glacalc/algebra.hpp"
#include "glacalc/forms.hpp"
#include "glacalc/systems.hpp"

namespace glacalc::cli {

/// Every named object a definition file declares, in declaration order.
/// Names share one namespace across kinds, so lookups are unambiguous.
struct Definitions {
  std::vector<std::string> ring;  // coordinate variable names (may be empty)
  bool has_ring = false;
  std::vector<std::pair<std::string, AlgebraPtr>> algebras;
  std::vector<std::pair<std::string, DiffeoPair>> diffeos;
  std::vector<std::pair<std::string, Element>> elements;
  std::vector<std::pair<std::string, Form>> forms;
  std::vector<std::pair<std::string, Subspace>> subspaces;
  std::vector<std::pair<std::string, IdealSpec>> ideals;
  std::vector<std::pair<std::string, Morphism>> morphisms;

  [[nodiscard]] const AlgebraPtr* find_algebra(const std::string& name) const;
  [[nodiscard]] const DiffeoPair* find_diffeo(const std::string& name) const;
  [[nodiscard]] const Element* find_element(const std::string& name) const;
  [[nodiscard]] const Form* find_form(const std::string& name) const;
  [[nodiscard]] const Subspace* find_subspace(const std::string& name) const;
  [[nodiscard]] const IdealSpec* find_ideal(const std::string& name) const;
  [[nodiscard]] const Morphism* find_morphism(const std::string& name) const;
  [[nodiscard]] bool name_taken(const std::string& name) const;
};

/// Parses the line-oriented definition format.  `#` starts a comment,
/// blank lines are skipped, and every statement either fits on one line or
/// opens a block closed by a bare `end`:
///
///   ring x y
///   algebra H heisenberg            # also: sl2, tangent_line
///   algebra A der_plus_f 2
///   algebra B explicit 2            # anchor a i = expr / structure g a b = expr
///     anchor 1 1 = x
///     structure 2 1 2 = y
///     structure 2 2 1 = -y
///   end
///   algebra C bullet                # one row line per ring variable
///     row 1, 0
///     row 0, x
///   end
///   diffeo D                        # forward/inverse over the ring
///     forward x + 1, y
///     inverse x - 1, y
///   end
///   algebra E deform A D
///   algebra P pullback A            # forward map only
///     map x^2, y
///   end
///   element u of H = 1, 0, x
///   form w of H degree 2            # `at` takes degree many 1-based indices
///     at 1 2 = -1
///   end
///   subspace S of H = t1, u         # element names or basis shorthand t<k>
///   ideal I of H cap 2 = w
///   morphism f H -> H               # target-dimension row lines, source width
///     row 1, 0, 0
///     row 0, 1, 0
///     row 0, 0, 1
///   end
///
/// All indices are 1-based.  Every reference must be declared earlier in
/// the file.  Throws ParseError with the offending line on any problem,
/// including construction errors surfaced while building the objects.
Definitions parse_definition(const std::string& text);

}  // namespace glacalc::cli

#endif
