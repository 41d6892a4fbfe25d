#include "liekit/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "liekit/errors.hpp"

namespace liekit {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw NonSquareError("poly(matrix): matrix is not square");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + o.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) - o.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Rational> Polynomial::divide_linear(const Rational& r) const {
  if (is_zero()) return {Polynomial(), Rational(0)};
  // Synthetic division by (t - r).
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    if (i < q.size()) q[i] = carry;
    carry = coeffs_[i] + carry * r;
  }
  return {Polynomial(std::move(q)), carry};
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    if (k == 0 || a != Rational(1)) os << a.str();
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

// --- integer factorization helpers (for rational root candidates) ---------

Integer mulmod(const Integer& a, const Integer& b, const Integer& n) {
  return Integer((a * b) % n);
}

Integer pollard_brent(const Integer& n) {
  // Brent's cycle variant of Pollard rho; n must be odd composite.
  if (n % 2 == 0) return Integer(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEuL);
  while (true) {
    Integer y = rng.get_z_range(n - 1) + 1;
    Integer c = rng.get_z_range(n - 1) + 1;
    Integer m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        const Integer bound = std::min(m, Integer(r - k));
        for (Integer i = 0; i < bound; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, abs(x - y), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += bound;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  Integer d = 17;
  while (n > 1 && d * d <= n && d < 100000) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
    d += 2;
  }
  if (n == 1) return;
  if (d * d > n || mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  const Integer f = pollard_brent(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

// All positive divisors of n that are <= bound.
std::vector<Integer> bounded_divisors(const Integer& n, const Integer& bound) {
  std::map<Integer, unsigned> factors;
  factor_into(n, factors);
  std::vector<Integer> divisors{Integer(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divisors.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      if (pk > bound) break;
      for (std::size_t i = 0; i < count; ++i) {
        Integer d = divisors[i] * pk;
        if (d <= bound) divisors.push_back(std::move(d));
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  return divisors;
}

// Content-free integer coefficient version of p (sign of leading preserved).
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    l = g;
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(p.coefficients().size());
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.numerator() * (l / c.denominator());
    Integer g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    content = g;
    coeffs.push_back(std::move(v));
  }
  if (content > 1) {
    for (auto& v : coeffs) v /= content;
  }
  return coeffs;
}

RootList roots_by_deflation(const Polynomial& p, const std::set<Rational>& candidates) {
  RootList out;
  Polynomial rem = p;
  for (const Rational& r : candidates) {
    std::size_t mult = 0;
    while (!rem.is_zero() && rem.degree() >= 1) {
      auto [q, remainder] = rem.divide_linear(r);
      if (!remainder.is_zero()) break;
      rem = q;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.splits = rem.degree() == 0;
  return out;
}

}  // namespace

RootList rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("rational_roots: zero polynomial");
  if (p.degree() == 0) return RootList{{}, true};

  // Strip zero roots first so the constant term is nonzero.
  Polynomial q = p;
  std::size_t zero_mult = 0;
  while (q.coefficient(0).is_zero()) {
    auto [quot, rem] = q.divide_linear(Rational(0));
    (void)rem;
    q = quot;
    ++zero_mult;
  }

  std::set<Rational> candidates;
  if (q.degree() >= 1) {
    const std::vector<Integer> coeffs = primitive_integer_coeffs(q);
    const Integer& a0 = coeffs.front();
    const Integer& an = coeffs.back();

    // Any rational root num/den has num | a0, den | an and lies within the
    // Cauchy bound 1 + max|c_i/a_n|.
    Integer max_abs = 0;
    for (const auto& c : coeffs) max_abs = std::max(max_abs, Integer(abs(c)));
    const Integer abs_a0 = abs(a0);
    const Integer abs_an = abs(an);
    const Integer root_bound = max_abs / abs_an + 2;
    const Integer num_cap = std::min(abs_a0, Integer(root_bound * abs_an));

    const std::vector<Integer> nums = bounded_divisors(abs_a0, num_cap);
    const std::vector<Integer> dens = bounded_divisors(abs_an, abs_an);
    for (const Integer& den : dens) {
      const Integer num_bound = root_bound * den;
      for (const Integer& num : nums) {
        if (num > num_bound) break;
        candidates.insert(Rational(num, den));
        candidates.insert(Rational(-num, den));
      }
    }
  }

  RootList out = roots_by_deflation(q, candidates);
  if (zero_mult > 0) {
    out.roots.emplace_back(Rational(0), zero_mult);
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::size_t mult_sum = 0;
  for (const auto& [root, mult] : out.roots) mult_sum += mult;
  out.splits = mult_sum == p.degree();
  return out;
}

RootList rational_roots_among(const Polynomial& p, const std::vector<Rational>& candidates) {
  if (p.is_zero()) throw ZeroPolynomialError("rational_roots_among: zero polynomial");
  const std::set<Rational> unique(candidates.begin(), candidates.end());
  RootList out = roots_by_deflation(p, unique);
  std::size_t mult_sum = 0;
  for (const auto& [root, mult] : out.roots) mult_sum += mult;
  out.splits = mult_sum == p.degree();
  return out;
}

}  // namespace liekit
