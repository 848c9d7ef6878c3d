#include <algorithm>
#include <string>
#include <vector>

#include "nracover/errors.hpp"
#include "nracover/frontend.hpp"

namespace nracover {

std::string problem_str(const ParsedProblem& p) {
  std::string out = "vars";
  for (const std::string& v : p.variables) out += " " + v;
  out += "\n";
  for (const Constraint& c : p.formula.constraints) out += c.str() + "\n";
  return out;
}

Formula with_order(const ParsedProblem& p,
                   const std::vector<std::string>& names) {
  const std::vector<std::string>& old_names = p.formula.order->names();
  if (names.size() != old_names.size())
    throw Error("variable order must list all " +
                std::to_string(old_names.size()) + " declared variables");
  // old variable index -> new variable index
  std::vector<unsigned> remap(old_names.size());
  std::vector<bool> used(names.size(), false);
  for (size_t i = 0; i < old_names.size(); ++i) {
    auto it = std::find(names.begin(), names.end(), old_names[i]);
    if (it == names.end())
      throw Error("variable order omits declared variable '" + old_names[i] +
                  "'");
    size_t j = static_cast<size_t>(it - names.begin());
    if (used[j])
      throw Error("variable order repeats '" + names[j] + "'");
    used[j] = true;
    remap[i] = static_cast<unsigned>(j);
  }

  VarOrderPtr order = VarOrder::make(names);
  Formula out{order, {}};
  for (const Constraint& c : p.formula.constraints) {
    std::vector<std::pair<ExpVec, Rational>> terms;
    for (const auto& [e, coeff] : c.poly.terms()) {
      ExpVec ne(names.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) ne[remap[i]] = e[i];
      terms.emplace_back(std::move(ne), coeff);
    }
    out.constraints.push_back(
        {MultiPoly::from_terms(order, terms), c.rel, c.id});
  }
  return out;
}

}  // namespace nracover
