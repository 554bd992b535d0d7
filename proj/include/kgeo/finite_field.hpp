#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace kgeo {

/// (p, m) with q = p^m, p prime, m >= 1; nullopt otherwise.
std::optional<std::pair<int, int>> prime_power_decomposition(int q);

inline bool is_prime_power(int q) { return prime_power_decomposition(q).has_value(); }

/// GF(p^m) with elements encoded as integers 0..q-1: the base-p digits are
/// the coefficients of a polynomial over GF(p), reduced modulo a monic
/// irreducible of degree m. Prime fields use plain modular arithmetic.
class FiniteField {
 public:
  /// Throws InadmissibleParameters when q is not a prime power.
  explicit FiniteField(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  // Coefficients c_0..c_m of the defining polynomial (c_m = 1).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const;
  int inv(int a) const;  // a != 0

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  int q_;
  int p_;
  int m_;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

/// Monic irreducible polynomial of degree m over GF(p), coefficients from
/// the constant term up. The lexicographically first one found by
/// exhaustive trial division.
std::vector<int> find_irreducible(int p, int m);

}  // namespace kgeo
