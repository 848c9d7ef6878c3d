#include "nracover/certificate.hpp"

#include <utility>

namespace nracover {

Bound Bound::pos_inf() {
  Bound b;
  b.kind = Kind::PosInf;
  return b;
}

Bound Bound::open(RealAlgebraic v) {
  Bound b;
  b.kind = Kind::Value;
  b.value = std::move(v);
  b.closed = false;
  return b;
}

Bound Bound::closed_at(RealAlgebraic v) {
  Bound b;
  b.kind = Kind::Value;
  b.value = std::move(v);
  b.closed = true;
  return b;
}

bool Bound::operator==(const Bound& o) const {
  if (kind != o.kind) return false;
  if (kind != Kind::Value) return true;
  return closed == o.closed && value == o.value;
}

std::string Bound::str() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Value: return value.str();
  }
  return "?";
}

bool bound_lower_before(const Bound& a, const Bound& b) {
  if (a.kind == Bound::Kind::NegInf || b.kind == Bound::Kind::NegInf)
    return a.kind == Bound::Kind::NegInf && b.kind != Bound::Kind::NegInf;
  Cmp c = compare(a.value, b.value);
  if (c != Cmp::Eq) return c == Cmp::Lt;
  return a.closed && !b.closed;
}

bool bound_connects(const Bound& covered, const Bound& lower) {
  if (covered.kind == Bound::Kind::PosInf) return true;
  if (lower.kind == Bound::Kind::NegInf) return true;
  Cmp c = compare(lower.value, covered.value);
  if (c != Cmp::Eq) return c == Cmp::Lt;
  return covered.closed || lower.closed;
}

bool bound_reaches_further(const Bound& cur, const Bound& b) {
  if (cur.kind == Bound::Kind::PosInf) return false;
  if (b.kind == Bound::Kind::PosInf) return true;
  Cmp c = compare(cur.value, b.value);
  if (c != Cmp::Eq) return c == Cmp::Lt;
  return !cur.closed && b.closed;
}

bool CoveringInterval::operator==(const CoveringInterval& o) const {
  return lower == o.lower && upper == o.upper && sample == o.sample &&
         reasons == o.reasons && characterization == o.characterization &&
         children == o.children;
}

bool Certificate::operator==(const Certificate& o) const {
  if (variables != o.variables || producer != o.producer) return false;
  if (constraints.size() != o.constraints.size()) return false;
  for (size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].id != o.constraints[i].id ||
        constraints[i].rel != o.constraints[i].rel ||
        !(constraints[i].poly == o.constraints[i].poly))
      return false;
  }
  return covering == o.covering;
}

Verdict Verdict::fail(std::string path, std::string reason) {
  Verdict v;
  v.valid = false;
  v.path = std::move(path);
  v.reason = std::move(reason);
  return v;
}

std::string Verdict::str() const {
  if (valid) return "valid";
  std::string s = "invalid: ";
  if (!path.empty()) s += path + ": ";
  s += reason;
  return s;
}

}  // namespace nracover
