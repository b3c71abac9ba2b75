#include "tsing/markov.hpp"

#include <deque>
#include <stdexcept>

namespace tsing {

std::string MarkovEquation::str() const {
  auto term = [](const Int& c, const char* v) {
    std::string s = c == 1 ? "" : c.get_str();
    return s + v + "^2";
  };
  return term(coeffs[0], "a") + "+" + term(coeffs[1], "b") + "+" +
         term(coeffs[2], "c") + "=" + lambda.get_str() + "abc";
}

const std::array<MarkovEquation, 4>& markov_equations() {
  static const std::array<MarkovEquation, 4> eqs = {{
      {1, {1, 1, 1}, 3, {Triple{1, 1, 1}}},
      {2, {1, 1, 2}, 4, {Triple{1, 1, 1}}},
      {3, {1, 2, 3}, 6, {Triple{1, 1, 1}}},
      {4, {1, 1, 5}, 5, {Triple{1, 2, 1}, Triple{2, 1, 1}}},
  }};
  return eqs;
}

const MarkovEquation& markov_equation(int family_id) {
  if (family_id < 1 || family_id > 4)
    throw std::invalid_argument("markov_equation: family must be 1..4");
  return markov_equations()[family_id - 1];
}

Int equation_residual(const MarkovEquation& eq, const Triple& t) {
  return eq.coeffs[0] * t[0] * t[0] + eq.coeffs[1] * t[1] * t[1] +
         eq.coeffs[2] * t[2] * t[2] - eq.lambda * t[0] * t[1] * t[2];
}

bool is_solution(const MarkovEquation& eq, const Triple& t) {
  for (const Int& x : t)
    if (x <= 0) throw std::invalid_argument("is_solution: entries must be positive");
  return equation_residual(eq, t) == 0;
}

Triple mutate(const MarkovEquation& eq, const Triple& t, int pos) {
  if (pos < 0 || pos > 2) throw std::invalid_argument("mutate: pos in {0,1,2}");
  if (eq.lambda % eq.coeffs[pos] != 0)
    throw std::logic_error("mutate: coefficient does not divide lambda");
  Triple out = t;
  const Int& y = t[(pos + 1) % 3];
  const Int& z = t[(pos + 2) % 3];
  out[pos] = (eq.lambda / eq.coeffs[pos]) * y * z - t[pos];
  if (out[pos] <= 0) throw std::domain_error("mutate: nonpositive result");
  return out;
}

std::set<Triple> enumerate_solutions(const MarkovEquation& eq, const Int& bound) {
  std::set<Triple> seen;
  std::deque<Triple> queue;
  bool seeded = false;
  for (const Triple& m : eq.minimal_solutions) {
    if (std::max({m[0], m[1], m[2]}) > bound) continue;
    seeded = true;
    if (seen.insert(m).second) queue.push_back(m);
  }
  if (!seeded)
    throw std::invalid_argument(
        "enumerate_solutions: bound below every minimal solution");
  while (!queue.empty()) {
    Triple t = queue.front();
    queue.pop_front();
    for (int pos = 0; pos < 3; ++pos) {
      Triple m = mutate(eq, t, pos);
      if (std::max({m[0], m[1], m[2]}) > bound) continue;
      if (seen.insert(m).second) queue.push_back(m);
    }
  }
  return seen;
}

std::optional<std::pair<int, Triple>> descent_step(const MarkovEquation& eq,
                                                   const Triple& t) {
  if (!is_solution(eq, t))
    throw std::invalid_argument("descent_step: not a solution");
  Int sum = t[0] + t[1] + t[2];
  for (int pos = 0; pos < 3; ++pos) {
    Triple m = mutate(eq, t, pos);
    if (m[0] + m[1] + m[2] < sum) return std::make_pair(pos, m);
  }
  return std::nullopt;
}

std::string triple_str(const Triple& t) {
  return "(" + t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str() + ")";
}

}  // namespace tsing
