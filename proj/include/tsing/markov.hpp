#pragma once
// The four Markov-type equations alpha*a^2 + beta*b^2 + gamma*c^2 =
// lambda*a*b*c, their Vieta mutations, and bounded enumeration of the
// mutation trees from the minimal solutions.

#include <array>
#include <optional>
#include <set>

#include "tsing/exactmath.hpp"

namespace tsing {

using Triple = std::array<Int, 3>;

struct MarkovEquation {
  int family_id;               // 1..4
  std::array<Int, 3> coeffs;   // (alpha, beta, gamma); each divides lambda
  Int lambda;
  std::vector<Triple> minimal_solutions;

  std::string str() const;  // "a^2+2b^2+3c^2=6abc"
};

/// The four equation records: (1,1,1;3), (1,1,2;4), (1,2,3;6), (1,1,5;5)
/// with minimal solutions (1,1,1) for families 1-3 and (1,2,1), (2,1,1)
/// for family 4.
const std::array<MarkovEquation, 4>& markov_equations();
const MarkovEquation& markov_equation(int family_id);

/// Residual alpha*a^2 + beta*b^2 + gamma*c^2 - lambda*a*b*c.
Int equation_residual(const MarkovEquation& eq, const Triple& t);

bool is_solution(const MarkovEquation& eq, const Triple& t);

/// Vieta mutation at one coordinate: x -> (lambda/coeff)*yz - x.
/// Solutions map to solutions; a nonpositive result (impossible for
/// genuine solutions) throws.
Triple mutate(const MarkovEquation& eq, const Triple& t, int pos);

/// Breadth-first closure of the minimal solutions under mutation,
/// pruned at max entry <= bound. Contains every solution within the
/// bound: the mutation decreasing a+b+c also decreases the max entry,
/// so descent paths never leave the box (certified by descent tests).
std::set<Triple> enumerate_solutions(const MarkovEquation& eq, const Int& bound);

/// First mutation position strictly decreasing a+b+c, with the mutated
/// triple; absent iff t is a minimal solution.
std::optional<std::pair<int, Triple>> descent_step(const MarkovEquation& eq,
                                                   const Triple& t);

std::string triple_str(const Triple& t);  // "(1,2,5)"

}  // namespace tsing
