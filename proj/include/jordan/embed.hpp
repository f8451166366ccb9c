#ifndef JORDAN_EMBED_HPP
#define JORDAN_EMBED_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/groebner.hpp"

namespace jordan {

struct B2Witness {
  Element e;
  Element y;
};

struct EmbedResult {
  Solvability answer = Solvability::Inconclusive;
  std::optional<B2Witness> witness;
  std::string method;
  std::vector<Solvability> branches;
  std::size_t pairs_reduced = 0;
};

/// e*e = e, e*y = y/2, y*y = 0 with y != 0.
bool is_b2_witness(const Algebra& a, const Element& e, const Element& y);

/// Polynomial system in e_1..e_n, y_1..y_n for the three product equations.
PolySystem b2_system(const Algebra& a);

/// Decides whether B2 is a subalgebra of a over the algebraic closure.
EmbedResult embeds_b2(const Algebra& a, const GroebnerOptions& opts = {});

}  // namespace jordan

#endif
