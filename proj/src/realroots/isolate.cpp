// Real root isolation: square-free reduction, rational-root deflation via
// divisor candidates, then Descartes'-rule (sign-variation) bisection on the
// remaining integer polynomial.  All arithmetic is exact.

#include <algorithm>
#include <utility>

#include "nracover/errors.hpp"
#include "nracover/real_algebraic.hpp"

namespace nracover {

namespace {

using IntVec = std::vector<Integer>;  // dense, low-to-high, trimmed

void trim(IntVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntVec to_intvec(const UniPoly& p) {
  std::vector<Integer> c = p.int_coeffs();
  trim(c);
  return c;
}

/// p(num/den) * den^deg(p); exact integer Horner.
Integer eval_scaled(const IntVec& p, const Integer& num, const Integer& den) {
  if (p.empty()) return Integer(0);
  Integer r = p.back();
  Integer dp(1);
  for (size_t i = p.size() - 1; i-- > 0;) {
    dp *= den;
    r = r * num + p[i] * dp;
  }
  return r;
}

int sign_variations(const IntVec& p) {
  int count = 0, last = 0;
  for (const auto& c : p) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) {
      if (++count > 1) return count;  // callers only distinguish 0, 1, many
    }
    last = s;
  }
  return count;
}

/// In-place Taylor shift p(x) <- p(x + t).
void taylor_shift(IntVec& p, const Integer& t) {
  if (p.size() < 2 || t == 0) return;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    for (size_t j = p.size() - 1; j-- > i;) p[j] += t * p[j + 1];
}

void strip_content(IntVec& p) {
  Integer g(0);
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& c : p) c /= g;
}

/// Number of sign variations of (1+x)^n p(1/(1+x)) — Descartes' bound on the
/// number of roots of p in the open interval (0, 1).
int variation_test_01(const IntVec& p) {
  IntVec w(p.rbegin(), p.rend());
  taylor_shift(w, Integer(1));
  return sign_variations(w);
}

/// Power-of-two upper bound 2^e >= all |roots| of p (Fujiwara-style bound
/// computed from coefficient bit lengths).
unsigned root_bound_exp(const IntVec& p) {
  size_t n = p.size() - 1;
  long bn = static_cast<long>(mpz_sizeinbase(p[n].get_mpz_t(), 2));
  long e = 0;
  for (size_t i = 0; i < n; ++i) {
    if (p[i] == 0) continue;
    long bi = static_cast<long>(mpz_sizeinbase(p[i].get_mpz_t(), 2));
    long d = bi - bn + 1;  // |c_i/c_n| < 2^d
    long k = static_cast<long>(n - i);
    long ei = (d + k - 1) / k + 1;  // (|c_i/c_n|)^(1/k) * 2 < 2^ei
    e = std::max(e, ei);
  }
  return static_cast<unsigned>(std::max(e + 1, 1L));
}

/// Divisors of |n| found through trial division with a bounded factor base;
/// any unfactored cofactor contributes as one extra prime-like atom.  The
/// list is capped (sorted ascending, smallest kept) — see the module notes on
/// rational-root detection limits.
std::vector<Integer> bounded_divisors(Integer n) {
  constexpr unsigned long kTrialLimit = 1u << 20;
  constexpr size_t kMaxDivisors = 512;
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (unsigned long d = 2; d <= kTrialLimit && Integer(d) * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.emplace_back(Integer(d), e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);  // prime or unfactored cofactor
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [prime, exp] : factors) {
    size_t base = divs.size();
    Integer pw(1);
    for (unsigned e = 1; e <= exp; ++e) {
      pw *= prime;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pw);
        if (divs.size() > 4 * kMaxDivisors) break;
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  if (divs.size() > kMaxDivisors) divs.resize(kMaxDivisors);
  return divs;
}

/// All rational roots of the square-free integer polynomial (subject to the
/// divisor cap), deflating each from p.
std::vector<Rational> deflate_rational_roots(UniPoly& p) {
  std::vector<Rational> roots;
  IntVec c = to_intvec(p);
  // Roots at zero first.
  if (!c.empty() && c[0] == 0) {
    roots.emplace_back(0);
    p = p.divide_exact(UniPoly({Rational(0), Rational(1)})).primitive();
    c = to_intvec(p);
  }
  if (p.degree() < 1) return roots;
  std::vector<Integer> nums = bounded_divisors(c.front());
  std::vector<Integer> dens = bounded_divisors(c.back());
  std::vector<Rational> candidates;
  for (const auto& u : nums)
    for (const auto& v : dens) {
      if (gcd(u, v) != 1) continue;
      candidates.emplace_back(u, v);
      candidates.emplace_back(-u, v);
    }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& cand : candidates) {
    if (p.degree() < 1) break;
    IntVec cur = to_intvec(p);
    if (eval_scaled(cur, cand.numerator(), cand.denominator()) == 0) {
      roots.push_back(cand);
      p = p.divide_exact(UniPoly::linear_root(cand)).primitive();
    }
  }
  if (p.degree() == 1) {  // remaining linear factor has a rational root
    roots.push_back(-p[0] / p[1]);
    p = UniPoly::constant(Rational(1));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct DyadicInterval {
  Integer c;       // interval (c/2^k, (c+1)/2^k) in unit coordinates
  unsigned k = 0;
};

struct IsolationRun {
  std::vector<DyadicInterval> intervals;  // in increasing order
  std::optional<Rational> midpoint_root;  // unit-coordinate exact hit
};

/// Descartes bisection on (0,1) for a square-free integer polynomial with no
/// roots at dyadic points unless reported via midpoint_root (then the caller
/// deflates and restarts).
IsolationRun isolate_unit(const IntVec& p0) {
  IsolationRun out;
  struct Node {
    IntVec p;
    Integer c;
    unsigned k;
  };
  std::vector<Node> stack;
  stack.push_back({p0, Integer(0), 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    int var = variation_test_01(node.p);
    if (var == 0) continue;
    if (var == 1) {
      out.intervals.push_back({node.c, node.k});
      continue;
    }
    size_t n = node.p.size() - 1;
    IntVec left(node.p.size());
    Integer two_pow(1);
    for (size_t i = 0; i <= n; ++i) {  // left = 2^n p(x/2)
      left[n - i] = node.p[n - i] * two_pow;
      two_pow <<= 1;
    }
    IntVec right = left;
    taylor_shift(right, Integer(1));  // right = 2^n p((x+1)/2)
    if (!right.empty() && right[0] == 0) {
      // Exact hit at the midpoint: a rational root the divisor pass missed.
      out.midpoint_root = Rational(2 * node.c + 1, Integer(1) << (node.k + 1));
      return out;
    }
    strip_content(left);
    strip_content(right);
    trim(left);
    trim(right);
    // Left child first so emitted intervals are sorted.
    stack.push_back({std::move(right), 2 * node.c + 1, node.k + 1});
    stack.push_back({std::move(left), 2 * node.c, node.k + 1});
  }
  // LIFO emission above yields left-to-right order already.
  return out;
}

}  // namespace

std::vector<RealAlgebraic> isolate_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error("isolate_roots: zero polynomial");
  if (p.degree() == 0) return {};
  UniPoly core = p.square_free_part();
  std::vector<Rational> rational_roots = deflate_rational_roots(core);

  std::vector<std::pair<Rational, Rational>> alg_intervals;
  while (core.degree() >= 1) {
    if (core.degree() == 1) {  // only after a missed-root deflation
      rational_roots.push_back(-core[0] / core[1]);
      std::sort(rational_roots.begin(), rational_roots.end());
      core = UniPoly::constant(Rational(1));
      break;
    }
    IntVec c = to_intvec(core);
    unsigned e = root_bound_exp(c);
    Integer bound = Integer(1) << e;
    // Map (-B, B) to (0, 1): q(x) = core(-B + 2Bx).
    IntVec q = c;
    taylor_shift(q, -bound);
    Integer scale(1);
    size_t n = q.size() - 1;
    for (size_t i = 1; i <= n; ++i) {
      scale <<= (e + 1);
      q[i] *= scale;
    }
    strip_content(q);
    IsolationRun run = isolate_unit(q);
    if (run.midpoint_root) {
      Rational global = Rational(-bound) + Rational(2 * bound) * *run.midpoint_root;
      rational_roots.push_back(global);
      std::sort(rational_roots.begin(), rational_roots.end());
      core = core.divide_exact(UniPoly::linear_root(global)).primitive();
      alg_intervals.clear();
      continue;  // restart on the deflated polynomial
    }
    Rational two_b(2 * bound);
    for (const auto& iv : run.intervals) {
      Rational denom(Integer(1) << iv.k);
      Rational lo = Rational(-bound) + two_b * Rational(iv.c) / denom;
      Rational hi = Rational(-bound) + two_b * Rational(iv.c + 1) / denom;
      alg_intervals.emplace_back(lo, hi);
    }
    break;
  }

  std::vector<RealAlgebraic> roots;
  if (!alg_intervals.empty()) {
    auto defpoly = std::make_shared<const UniPoly>(core);
    int index = 0;
    for (const auto& [lo, hi] : alg_intervals)
      roots.push_back(RealAlgebraic::algebraic(defpoly, lo, hi, ++index));
  }
  for (const auto& r : rational_roots) roots.emplace_back(r);
  std::sort(roots.begin(), roots.end(),
            [](const RealAlgebraic& a, const RealAlgebraic& b) {
              return compare(a, b) == Cmp::Lt;
            });
  // The core's isolating intervals may still contain deflated rational
  // roots; tighten until all enclosures are pairwise disjoint.
  for (size_t i = 1; i < roots.size(); ++i) {
    while (roots[i - 1].hi() > roots[i].lo()) {
      size_t wide =
          roots[i - 1].hi() - roots[i - 1].lo() >= roots[i].hi() - roots[i].lo()
              ? i - 1
              : i;
      roots[wide] = roots[wide].refined_step();
    }
  }
  return roots;
}

}  // namespace nracover
