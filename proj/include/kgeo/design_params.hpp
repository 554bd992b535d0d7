#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace kgeo {

/// The parameter tuple (b, n, r, k, lambda) of a balanced incomplete block
/// design: b blocks of size k over n points, every point in r blocks and
/// every pair of points in lambda blocks.
///
/// Construction only checks positivity and 2 <= k <= n. Whether the tuple
/// is arithmetically consistent is the job of check_necessary().
struct DesignParams {
  std::int64_t b;
  std::int64_t n;
  std::int64_t r;
  std::int64_t k;
  std::int64_t lambda;

  DesignParams(std::int64_t b, std::int64_t n, std::int64_t r, std::int64_t k,
               std::int64_t lambda);

  bool is_symmetric() const noexcept { return b == n; }

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
  friend auto operator<=>(const DesignParams&, const DesignParams&) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const DesignParams& p);

enum class BrcStatus { pass, fail_even_square, fail_odd_form };

std::string to_string(BrcStatus s);

struct AdmissibilityVerdict {
  bool necessary_ok = false;
  std::optional<bool> hanani_ok;
  std::optional<BrcStatus> brc_ok;
  // (x, y, z) with x^2 = (k - lambda) y^2 + (-1)^((v-1)/2) lambda z^2.
  std::optional<std::array<std::int64_t, 3>> witness;
  // Per-variable search box for the ternary form, in the original variables'
  // reduced coordinates. Present whenever the odd-order search ran.
  std::optional<std::array<std::int64_t, 3>> search_bound;

  bool admissible() const noexcept {
    return necessary_ok && hanani_ok.value_or(true) &&
           brc_ok.value_or(BrcStatus::pass) == BrcStatus::pass;
  }
};

/// bk = nr and r(k-1) = lambda(n-1), exactly.
bool check_necessary(const DesignParams& params);

/// Triple-system parameters (lambda n(n-1)/6, n, lambda(n-1)/2, 3, lambda)
/// for lambda in {1, 2, 3}. Throws InadmissibleParameters when either
/// fraction is not integral and PreconditionError for n < 3, lambda outside
/// {1, 2, 3} or n above the supported range.
DesignParams triple_system_params(std::int64_t n, std::int64_t lambda);

/// Existence test for triple systems with arbitrary lambda >= 1:
/// lambda n(n-1) = 0 (mod 6) and lambda(n-1) = 0 (mod 2).
bool hanani_admissible(std::int64_t n, std::int64_t lambda);

/// Symmetric parameters with v = (n^2 + n + lambda)/lambda, k = r = n + 1.
/// v is stored in both b and n.
DesignParams symmetric_params(std::int64_t n, std::int64_t lambda);

/// Bruck-Ryser-Chowla screen for a symmetric (v, k, lambda) design.
/// For even v checks that k - lambda is a perfect square. For odd v searches
/// the ternary form exhaustively inside Holzer's box after reduction to
/// square-free pairwise coprime coefficients; a pass carries a witness.
/// Throws PreconditionError unless lambda(v-1) = k(k-1).
AdmissibilityVerdict brc_admissible(std::int64_t v, std::int64_t k, std::int64_t lambda);

/// Upper bound on n accepted by the derivation routines.
inline constexpr std::int64_t kMaxDerivedN = 1'000'000;

}  // namespace kgeo
