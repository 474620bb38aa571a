#pragma once

#include <optional>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

/// coefficient * left * gens[generator] * right
struct WitnessTerm {
  Scalar coefficient;
  Monomial left;
  std::size_t generator = 0;
  Monomial right;
};

/// Certificate that an element lies in the two-sided ideal spanned by a list
/// of generators. `bound` is the largest factor length that was allowed.
struct MembershipWitness {
  std::vector<WitnessTerm> combination;
  std::size_t bound = 0;
};

/// Sum of the witness terms, in normal form.
Element evaluate_witness(const MembershipWitness& w, const std::vector<Element>& gens);

/// True if the witness evaluates exactly to x.
bool check_witness(const MembershipWitness& w, const std::vector<Element>& gens, const Element& x);

struct OracleResult {
  std::optional<MembershipWitness> witness;  // empty: not found within bound
  std::size_t bound = 0;
  std::size_t candidates = 0;  // products examined

  bool found() const { return witness.has_value(); }
};

/// Bounded search for x in the span of { m1 * g * m2 } over basis monomials
/// m1, m2 of length <= max_len, solved by exact elimination. A negative
/// answer is inconclusive. Bundles contribute member 0 plus every member
/// mentioned by the inputs.
OracleResult membership_oracle(const std::vector<Element>& gens, const Element& x, std::size_t max_len);

/// All basis (non-reducible) monomials of length <= max_len whose bundle
/// members come from `members` (indexed by arrow id; empty means {0}).
std::vector<Monomial> basis_monomials(const Graph& g, std::size_t max_len,
                                      const std::vector<std::vector<std::uint64_t>>& members = {});

}  // namespace lpa
