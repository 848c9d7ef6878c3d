#pragma once

#include <string>
#include <vector>

#include "nracover/multipoly.hpp"
#include "nracover/sign.hpp"

namespace nracover {

/// Relations of atomic constraints p REL 0.
enum class Relation { Lt, Le, Eq, Ne, Ge, Gt };

const char* relation_str(Relation r);
Relation negate_relation(Relation r);

/// True if a value of the given sign satisfies the relation against zero.
bool sign_satisfies(Sign s, Relation r);

/// Atomic constraint p REL 0 over the shared variable order; `id` is the
/// 0-based position in the input conjunction, used in certificates.
struct Constraint {
  MultiPoly poly;
  Relation rel;
  int id;

  std::string str() const;
};

/// A conjunction of atomic constraints.
struct Formula {
  VarOrderPtr order;
  std::vector<Constraint> constraints;
};

}  // namespace nracover
