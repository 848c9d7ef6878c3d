#include "nracover/constraint.hpp"

#include "nracover/errors.hpp"

namespace nracover {

const char* relation_str(Relation r) {
  switch (r) {
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Ge: return ">=";
    case Relation::Gt: return ">";
  }
  throw Error("bad relation");
}

Relation negate_relation(Relation r) {
  switch (r) {
    case Relation::Lt: return Relation::Ge;
    case Relation::Le: return Relation::Gt;
    case Relation::Eq: return Relation::Ne;
    case Relation::Ne: return Relation::Eq;
    case Relation::Ge: return Relation::Lt;
    case Relation::Gt: return Relation::Le;
  }
  throw Error("bad relation");
}

bool sign_satisfies(Sign s, Relation r) {
  switch (r) {
    case Relation::Lt: return s == Sign::Negative;
    case Relation::Le: return s != Sign::Positive;
    case Relation::Eq: return s == Sign::Zero;
    case Relation::Ne: return s != Sign::Zero;
    case Relation::Ge: return s != Sign::Negative;
    case Relation::Gt: return s == Sign::Positive;
  }
  throw Error("bad relation");
}

std::string Constraint::str() const {
  return poly.str() + " " + relation_str(rel) + " 0";
}

}  // namespace nracover
