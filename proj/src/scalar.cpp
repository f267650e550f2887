#include "liedual/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace liedual {

const char* err_name(Err e) {
  switch (e) {
    case Err::DIM_MISMATCH: return "DIM_MISMATCH";
    case Err::SINGULAR: return "SINGULAR";
    case Err::NON_SYMMETRIC: return "NON_SYMMETRIC";
    case Err::NOT_IN_SPAN: return "NOT_IN_SPAN";
    case Err::NOT_INVOLUTION: return "NOT_INVOLUTION";
    case Err::NOT_AUTOMORPHISM: return "NOT_AUTOMORPHISM";
    case Err::NOT_COMMUTING: return "NOT_COMMUTING";
    case Err::NOT_CARTAN: return "NOT_CARTAN";
    case Err::NOT_COMPACT: return "NOT_COMPACT";
    case Err::NOT_SEMISIMPLE: return "NOT_SEMISIMPLE";
    case Err::NOT_SIMPLE_SUMMAND: return "NOT_SIMPLE_SUMMAND";
    case Err::THETA_NOT_STABLE: return "THETA_NOT_STABLE";
    case Err::NOT_IRREDUCIBLE: return "NOT_IRREDUCIBLE";
    case Err::UNRECOGNIZED_PATTERN: return "UNRECOGNIZED_PATTERN";
    case Err::ROOT_NOT_GAUSSIAN: return "ROOT_NOT_GAUSSIAN";
    case Err::NOT_IN_V: return "NOT_IN_V";
    case Err::NON_INTEGER_GRADING: return "NON_INTEGER_GRADING";
    case Err::NOT_GRADE_REVERSING: return "NOT_GRADE_REVERSING";
    case Err::NOT_IN_GAMMA: return "NOT_IN_GAMMA";
    case Err::NOT_RIEMANNIAN: return "NOT_RIEMANNIAN";
    case Err::NOT_INVARIANT: return "NOT_INVARIANT";
    case Err::BAD_PARAMS: return "BAD_PARAMS";
    case Err::UNKNOWN_WITNESS: return "UNKNOWN_WITNESS";
    case Err::MALFORMED: return "MALFORMED";
    case Err::UNSUPPORTED: return "UNSUPPORTED";
    case Err::INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

Rat rat_of(long num, long den) {
  require(den != 0, Err::SINGULAR, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& s, bool strict) {
  if (s.empty()) fail(Err::MALFORMED, "empty rational");
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!check_int(num) || !check_int(den))
    fail(Err::MALFORMED, "bad rational \"" + s + "\"");
  Int n(num), d(den);
  if (d == 0) fail(Err::MALFORMED, "zero denominator in \"" + s + "\"");
  Rat q;
  mpq_set_num(q.get_mpq_t(), n.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), d.get_mpz_t());
  if (strict) {
    Rat c = q;
    c.canonicalize();
    if (mpq_cmp(c.get_mpq_t(), q.get_mpq_t()) != 0 ||
        mpz_cmp(mpq_denref(c.get_mpq_t()), mpq_denref(q.get_mpq_t())) != 0)
      fail(Err::MALFORMED, "non-canonical rational \"" + s + "\"");
    return c;
  }
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool rat_sqrt(const Rat& q, Rat& out) {
  if (q < 0) return false;
  Int n = q.get_num(), d = q.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Rat(rn) / Rat(rd);
  return true;
}

GaussRat gauss_i() { return GaussRat(Rat(0), Rat(1)); }

std::string gauss_str(const GaussRat& z) {
  if (z.im == 0) return rat_str(z.re);
  std::string s = rat_str(z.re);
  s += (z.im > 0 ? "+" : "-");
  Rat a = abs(z.im);
  s += rat_str(a) + "i";
  return s;
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_deg(const Poly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (poly_deg(a) < 0 || poly_deg(b) < 0) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return poly_trim(r);
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  int db = poly_deg(b);
  require(db >= 0, Err::SINGULAR, "polynomial division by zero");
  r = poly_trim(a);
  q.assign(1, Rat(0));
  q.clear();
  int da = poly_deg(r);
  if (da < db) {
    q = {};
    return;
  }
  q.assign(da - db + 1, Rat(0));
  while ((da = poly_deg(r)) >= db) {
    Rat c = r[da] / b[db];
    q[da - db] = c;
    for (int i = 0; i <= db; ++i) r[da - db + i] -= c * b[i];
    r = poly_trim(r);
  }
}

Poly poly_monic(Poly p) {
  p = poly_trim(p);
  int d = poly_deg(p);
  if (d < 0) return p;
  Rat lead = p[d];
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  while (poly_deg(b) >= 0) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return poly_monic(a);
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
  return poly_trim(r);
}

Poly poly_squarefree(const Poly& p) {
  Poly g = poly_gcd(p, poly_derivative(p));
  if (poly_deg(g) <= 0) return poly_monic(p);
  Poly q, r;
  poly_divmod(p, g, q, r);
  return poly_monic(q);
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace {

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Brent's variant of the rho cycle-finding method with deterministic
// parameter sweep; n must be odd, composite, and free of tiny factors.
Int rho_factor(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1);
    Int cc(static_cast<long>(c));
    auto step = [&](const Int& v) {
      Int t = (v * v + cc) % n;
      return t;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle without factor; retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(Int n, std::vector<Int>& out) {
  if (n <= 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = rho_factor(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<Int> factor_int(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      out.push_back(Int(p));
      n /= p;
    }
  }
  long p = 17;
  while (n > 1 && p < 100000 && Int(p) * p <= n) {
    while (n % p == 0) {
      out.push_back(Int(p));
      n /= p;
    }
    p += 2;
  }
  if (n > 1) factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> ds{Int(1)};
  Int m = n < 0 ? Int(-n) : n;
  if (m == 0) return ds;
  auto fs = factor_int(m);
  size_t i = 0;
  while (i < fs.size()) {
    size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    size_t mult = j - i;
    size_t base = ds.size();
    Int pw(1);
    for (size_t k = 1; k <= mult; ++k) {
      pw *= fs[i];
      for (size_t t = 0; t < base; ++t) ds.push_back(ds[t] * pw);
    }
    i = j;
  }
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

std::vector<Rat> rational_roots(const Poly& p_in) {
  std::vector<Rat> roots;
  Poly p = poly_trim(p_in);
  int d = poly_deg(p);
  if (d <= 0) return roots;
  // Strip x^k.
  size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(Rat(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
    d = poly_deg(p);
    if (d == 0) return roots;
  }
  // Clear denominators to a primitive integer polynomial.
  Int lcm(1);
  for (auto& c : p) {
    Int den = c.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> ic(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rat v = p[i] * Rat(lcm);
    ic[i] = v.get_num();
  }
  Int a0 = ic[0], ad = ic[d];
  auto dn = divisors(a0), dd = divisors(ad);
  for (const Int& num : dn) {
    for (const Int& den : dd) {
      for (int sgn : {1, -1}) {
        Rat cand = Rat(num) / Rat(den) * sgn;
        cand.canonicalize();
        if (poly_eval(p, cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace liedual
