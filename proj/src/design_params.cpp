#include "kgeo/design_params.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "kgeo/errors.hpp"

namespace kgeo {

namespace {

using i128 = __int128;

std::int64_t isqrt(std::int64_t x) {
  if (x <= 0) return 0;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (static_cast<i128>(s) * s > x) --s;
  while (static_cast<i128>(s + 1) * (s + 1) <= x) ++s;
  return s;
}

bool is_square(std::int64_t x) {
  if (x < 0) return false;
  const auto s = isqrt(x);
  return s * s == x;
}

void check_derivation_input(std::int64_t n, std::int64_t lambda, std::int64_t min_n) {
  if (lambda < 1 || lambda > 3) {
    throw PreconditionError("lambda must be 1, 2 or 3, got " + std::to_string(lambda));
  }
  if (n < min_n) {
    throw PreconditionError("n must be at least " + std::to_string(min_n) + ", got " +
                            std::to_string(n));
  }
  if (n > kMaxDerivedN) {
    throw PreconditionError("n exceeds supported range: " + std::to_string(n));
  }
}

// Factor out square divisors: x = s^2 * core with core square-free.
std::pair<std::int64_t, std::int64_t> square_free_split(std::int64_t x) {
  std::int64_t sign = x < 0 ? -1 : 1;
  std::int64_t m = x < 0 ? -x : x;
  std::int64_t root = 1;
  std::int64_t core = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= m;
  return {root, sign * core};
}

std::int64_t smallest_prime_factor(std::int64_t m) {
  if (m < 0) m = -m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) return p;
  }
  return m;
}

struct TernaryResult {
  std::optional<std::array<std::int64_t, 3>> solution;
  std::array<std::int64_t, 3> bound;
};

// Nontrivial solution of c0 x^2 + c1 y^2 + c2 z^2 = 0, all ci nonzero.
TernaryResult solve_ternary(std::array<std::int64_t, 3> coef) {
  // X_i = mult_i * Y_i maps reduced solutions back.
  std::array<std::int64_t, 3> mult{1, 1, 1};

  std::array<std::int64_t, 3> roots{};
  for (int i = 0; i < 3; ++i) {
    auto [root, core] = square_free_split(coef[i]);
    roots[i] = root;
    coef[i] = core;
  }
  const std::int64_t root_product = roots[0] * roots[1] * roots[2];
  for (int i = 0; i < 3; ++i) mult[i] = root_product / roots[i];

  for (bool changed = true; changed;) {
    changed = false;
    const std::int64_t g_all = std::gcd(std::gcd(coef[0], coef[1]), coef[2]);
    if (g_all > 1) {
      for (auto& c : coef) c /= g_all;
      changed = true;
      continue;
    }
    for (int i = 0; i < 3 && !changed; ++i) {
      for (int j = i + 1; j < 3 && !changed; ++j) {
        const std::int64_t g = std::gcd(coef[i], coef[j]);
        if (g <= 1) continue;
        const std::int64_t p = smallest_prime_factor(g);
        const int other = 3 - i - j;
        coef[i] /= p;
        coef[j] /= p;
        coef[other] *= p;
        mult[other] *= p;
        changed = true;
      }
    }
  }

  auto abs64 = [](std::int64_t x) { return x < 0 ? -x : x; };
  TernaryResult result;
  result.bound = {isqrt(abs64(coef[1] * coef[2])), isqrt(abs64(coef[0] * coef[2])),
                  isqrt(abs64(coef[0] * coef[1]))};

  for (std::int64_t x = 0; x <= result.bound[0]; ++x) {
    for (std::int64_t y = 0; y <= result.bound[1]; ++y) {
      if (x == 0 && y == 0) continue;
      const i128 partial = static_cast<i128>(coef[0]) * x * x + static_cast<i128>(coef[1]) * y * y;
      if (partial % coef[2] != 0) continue;
      const i128 z2 = -partial / coef[2];
      if (z2 < 0) continue;
      const auto z = isqrt(static_cast<std::int64_t>(z2));
      if (static_cast<i128>(z) * z != z2 || z > result.bound[2]) continue;
      std::array<std::int64_t, 3> w{x * mult[0], y * mult[1], z * mult[2]};
      const std::int64_t g = std::gcd(std::gcd(w[0], w[1]), w[2]);
      for (auto& c : w) c /= g;
      result.solution = w;
      return result;
    }
  }
  return result;
}

}  // namespace

DesignParams::DesignParams(std::int64_t b_, std::int64_t n_, std::int64_t r_, std::int64_t k_,
                           std::int64_t lambda_)
    : b(b_), n(n_), r(r_), k(k_), lambda(lambda_) {
  if (b <= 0 || n <= 0 || r <= 0 || k <= 0 || lambda <= 0) {
    throw PreconditionError("design parameters must be positive: " + to_string());
  }
  if (k < 2 || k > n) {
    throw PreconditionError("block size must satisfy 2 <= k <= n: " + to_string());
  }
}

std::string DesignParams::to_string() const {
  std::ostringstream os;
  os << '(' << b << ", " << n << ", " << r << ", " << k << ", " << lambda << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DesignParams& p) { return os << p.to_string(); }

std::string to_string(BrcStatus s) {
  switch (s) {
    case BrcStatus::pass:
      return "pass";
    case BrcStatus::fail_even_square:
      return "fail_even_square";
    case BrcStatus::fail_odd_form:
      return "fail_odd_form";
  }
  return "unknown";
}

bool check_necessary(const DesignParams& p) {
  return static_cast<i128>(p.b) * p.k == static_cast<i128>(p.n) * p.r &&
         static_cast<i128>(p.r) * (p.k - 1) == static_cast<i128>(p.lambda) * (p.n - 1);
}

bool hanani_admissible(std::int64_t n, std::int64_t lambda) {
  if (n < 3 || lambda < 1) return false;
  const i128 pairs = static_cast<i128>(lambda) * n * (n - 1);
  const i128 repl = static_cast<i128>(lambda) * (n - 1);
  return pairs % 6 == 0 && repl % 2 == 0;
}

DesignParams triple_system_params(std::int64_t n, std::int64_t lambda) {
  check_derivation_input(n, lambda, 3);
  if (!hanani_admissible(n, lambda)) {
    throw InadmissibleParameters("no triple system with n = " + std::to_string(n) +
                                 ", lambda = " + std::to_string(lambda));
  }
  return DesignParams(lambda * n * (n - 1) / 6, n, lambda * (n - 1) / 2, 3, lambda);
}

DesignParams symmetric_params(std::int64_t n, std::int64_t lambda) {
  check_derivation_input(n, lambda, 2);
  const std::int64_t numerator = n * n + n + lambda;
  if (numerator % lambda != 0) {
    throw InadmissibleParameters("n^2 + n + lambda is not divisible by lambda for n = " +
                                 std::to_string(n) + ", lambda = " + std::to_string(lambda));
  }
  const std::int64_t v = numerator / lambda;
  return DesignParams(v, v, n + 1, n + 1, lambda);
}

AdmissibilityVerdict brc_admissible(std::int64_t v, std::int64_t k, std::int64_t lambda) {
  if (v < 2 || k < 2 || lambda < 1 ||
      static_cast<i128>(lambda) * (v - 1) != static_cast<i128>(k) * (k - 1)) {
    throw PreconditionError("not symmetric design parameters: (" + std::to_string(v) + ", " +
                            std::to_string(k) + ", " + std::to_string(lambda) + ")");
  }
  AdmissibilityVerdict verdict;
  verdict.necessary_ok = check_necessary(DesignParams(v, v, k, k, lambda));
  const std::int64_t order = k - lambda;

  if (v % 2 == 0) {
    verdict.brc_ok = is_square(order) ? BrcStatus::pass : BrcStatus::fail_even_square;
    return verdict;
  }

  const std::int64_t sign = ((v - 1) / 2) % 2 == 0 ? 1 : -1;
  if (order == 0) {
    verdict.brc_ok = BrcStatus::pass;
    verdict.witness = std::array<std::int64_t, 3>{0, 1, 0};
    verdict.search_bound = std::array<std::int64_t, 3>{0, 0, 0};
    return verdict;
  }
  // x^2 - order y^2 - sign lambda z^2 = 0
  const auto solved = solve_ternary({1, -order, -sign * lambda});
  verdict.search_bound = solved.bound;
  if (solved.solution) {
    verdict.brc_ok = BrcStatus::pass;
    verdict.witness = solved.solution;
  } else {
    verdict.brc_ok = BrcStatus::fail_odd_form;
  }
  return verdict;
}

}  // namespace kgeo
