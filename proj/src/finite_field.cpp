#include "kgeo/finite_field.hpp"

#include <string>

#include "kgeo/errors.hpp"

namespace kgeo {

namespace {

using Poly = std::vector<int>;  // coefficients, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& divisor, int p) {
  // divisor is monic
  trim(a);
  const std::size_t d = divisor.size() - 1;
  while (a.size() > d) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) {
      a[shift + i] = ((a[shift + i] - lead * divisor[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(int value, int p, int width) {
  Poly out(width, 0);
  for (int i = 0; i < width; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int encode(const Poly& a, int p) {
  int value = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) value = value * p + *it;
  return value;
}

bool divides(const Poly& candidate_divisor, const Poly& a, int p) {
  return poly_mod(a, candidate_divisor, p).empty();
}

}  // namespace

std::optional<std::pair<int, int>> prime_power_decomposition(int q) {
  if (q < 2) return std::nullopt;
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1);
  int m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, m);
}

std::vector<int> find_irreducible(int p, int m) {
  int count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (int tail = 0; tail < count; ++tail) {
    Poly candidate = digits(tail, p, m);
    candidate.push_back(1);
    if (candidate[0] == 0 && m > 1) continue;  // divisible by x
    bool irreducible = true;
    for (int d = 1; d <= m / 2 && irreducible; ++d) {
      int divisor_count = 1;
      for (int i = 0; i < d; ++i) divisor_count *= p;
      for (int t = 0; t < divisor_count; ++t) {
        Poly divisor = digits(t, p, d);
        divisor.push_back(1);
        if (divides(divisor, candidate, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) return candidate;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(int q) : q_(q) {
  const auto pm = prime_power_decomposition(q);
  if (!pm) throw InadmissibleParameters(std::to_string(q) + " is not a prime power");
  p_ = pm->first;
  m_ = pm->second;
  modulus_ = m_ == 1 ? Poly{0, 1} : find_irreducible(p_, m_);

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  std::vector<Poly> elems;
  elems.reserve(q_);
  for (int a = 0; a < q_; ++a) elems.push_back(digits(a, p_, m_));

  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      Poly sum(m_);
      for (int i = 0; i < m_; ++i) sum[i] = (elems[a][i] + elems[b][i]) % p_;
      add_[index(a, b)] = encode(sum, p_);

      Poly prod(2 * m_ - 1, 0);
      for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p_;
      }
      mul_[index(a, b)] = encode(poly_mod(prod, modulus_, p_), p_);
    }
  }
}

int FiniteField::neg(int a) const {
  for (int b = 0; b < q_; ++b) {
    if (add(a, b) == 0) return b;
  }
  throw std::logic_error("no additive inverse");
}

int FiniteField::inv(int a) const {
  for (int b = 1; b < q_; ++b) {
    if (mul(a, b) == 1) return b;
  }
  throw PreconditionError("zero has no multiplicative inverse");
}

}  // namespace kgeo
