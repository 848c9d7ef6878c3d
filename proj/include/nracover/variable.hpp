#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nracover {

/// A variable is an index into a VarOrder.  Lower index = earlier in the
/// elimination order (projection removes the highest variable first).
struct Variable {
  unsigned index = 0;
  auto operator<=>(const Variable&) const = default;
};

/// Immutable, shared list of variable names defining the global order
/// x_1 < x_2 < ... < x_n.  Polynomials over different orders never mix.
class VarOrder {
 public:
  static std::shared_ptr<const VarOrder> make(std::vector<std::string> names) {
    return std::shared_ptr<const VarOrder>(new VarOrder(std::move(names)));
  }

  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  const std::string& name(Variable v) const { return names_.at(v.index); }
  const std::vector<std::string>& names() const { return names_; }
  Variable var(unsigned index) const { return Variable{index}; }

  std::optional<Variable> find(const std::string& name) const {
    for (unsigned i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return Variable{i};
    return std::nullopt;
  }

 private:
  explicit VarOrder(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

}  // namespace nracover
