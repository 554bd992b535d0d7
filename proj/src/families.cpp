#include "kgeo/families.hpp"

#include <array>
#include <cmath>

#include "kgeo/errors.hpp"
#include "kgeo/finite_field.hpp"

namespace kgeo {

namespace {

struct FamilyName {
  Family family;
  const char* full;
  const char* short_name;
};

constexpr std::array<FamilyName, 6> kNames{{
    {Family::thm5_sts, "thm5_sts", "thm5"},
    {Family::thm6_twofold, "thm6_twofold", "thm6"},
    {Family::thm7_threefold, "thm7_threefold", "thm7"},
    {Family::thm8_plane, "thm8_plane", "thm8"},
    {Family::thm9_biplane, "thm9_biplane", "thm9"},
    {Family::thm10_threefold_symmetric, "thm10_threefold_symmetric", "thm10"},
}};

bool perfect_square(std::int64_t x) {
  if (x < 0) return false;
  auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
  return s * s == x;
}

bool prime_power(std::int64_t x) {
  return x >= 2 && x <= (1 << 30) && is_prime_power(static_cast<int>(x));
}

std::optional<BlockDesign> direct_symmetric(int n, int lambda) {
  switch (lambda) {
    case 1:
      if (is_prime_power(n)) return build_projective_plane(n);
      break;
    case 2:
      if (n == 2) return build_complete_triples(4);
      if (n == 3) return complement_design(build_projective_plane(2));
      if (n == 4) return develop_difference_family(11, {{1, 3, 4, 5, 9}});
      break;
    case 3:
      if (n == 3) return develop_difference_family(5, {{0, 1, 2, 3}});
      if (n == 5) return complement_design(develop_difference_family(11, {{1, 3, 4, 5, 9}}));
      if (n == 6) return develop_difference_family(15, {{0, 1, 2, 4, 5, 8, 10}});
      break;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Family family) {
  for (const auto& name : kNames) {
    if (name.family == family) return name.full;
  }
  return "unknown";
}

std::optional<Family> parse_family(const std::string& text) {
  for (const auto& name : kNames) {
    if (text == name.full || text == name.short_name) return name.family;
  }
  return std::nullopt;
}

bool FamilySpec::admissible(Family family, std::int64_t n) {
  switch (family) {
    case Family::thm5_sts:
      return n >= 7 && (n % 6 == 1 || n % 6 == 3);
    case Family::thm6_twofold:
      return n >= 4 && (n % 3 == 0 || n % 3 == 1);
    case Family::thm7_threefold:
      return n >= 5 && n % 2 == 1;
    case Family::thm8_plane:
      return prime_power(n);
    case Family::thm9_biplane:
      return ((n % 4 == 1 || n % 4 == 2) && 2 <= n && n <= 10 && perfect_square(n - 1)) ||
             ((n % 4 == 0 || n % 4 == 3) && 3 <= n && n <= 12 && prime_power(n - 1));
    case Family::thm10_threefold_symmetric:
      return (n % 3 == 0 || n % 3 == 2) && 3 <= n && n <= 14 && n != 12;
  }
  return false;
}

FamilySpec::FamilySpec(Family family_, std::int64_t n_) : family(family_), n(n_) {
  if (n > kMaxDerivedN || !admissible(family, n)) {
    throw PreconditionError("n = " + std::to_string(n) + " is outside the range of " +
                            to_string(family));
  }
}

int FamilySpec::lambda() const {
  switch (family) {
    case Family::thm5_sts:
    case Family::thm8_plane:
      return 1;
    case Family::thm6_twofold:
    case Family::thm9_biplane:
      return 2;
    default:
      return 3;
  }
}

bool FamilySpec::symmetric() const {
  return family == Family::thm8_plane || family == Family::thm9_biplane ||
         family == Family::thm10_threefold_symmetric;
}

DesignParams FamilySpec::design_params() const {
  return symmetric() ? symmetric_params(n, lambda()) : triple_system_params(n, lambda());
}

TheoremClaims FamilySpec::claims() const {
  TheoremClaims c;
  c.source = to_string(family) + " n=" + std::to_string(n);
  c.max_K = lambda();
  switch (family) {
    case Family::thm5_sts:
      c.vertex_count = n * (n + 1) / 2;
      c.connectivity = 3;
      c.degrees = {static_cast<int>((n - 1) / 2), 3};
      break;
    case Family::thm6_twofold:
      c.vertex_count = n * n;
      c.connectivity = 3;
      c.degrees = {static_cast<int>(n - 1), 3};
      break;
    case Family::thm7_threefold:
      c.vertex_count = n * (3 * n - 1) / 2;
      c.connectivity = 3;
      c.degrees = {static_cast<int>(3 * (n - 1) / 2), 3};
      break;
    case Family::thm8_plane:
      c.vertex_count = (n * n + n + 1) * (n + 2);
      break;
    case Family::thm9_biplane:
      c.vertex_count = (n * n + n + 2) * (n + 2) / 2;
      break;
    case Family::thm10_threefold_symmetric:
      c.vertex_count = (n * n + n + 3) * (n + 2) / 3;
      break;
  }
  if (symmetric()) {
    c.connectivity = static_cast<int>(n + 1);
    c.degrees = {static_cast<int>(n + 1)};
    c.diameter = 4;
  }
  return c;
}

BlockDesign build_symmetric_design(int n, int lambda, const Catalog& catalog,
                                   std::uint64_t node_budget) {
  const auto params = symmetric_params(n, lambda);
  auto design = direct_symmetric(n, lambda);
  if (!design) design = catalog.lookup(params);
  if (!design) {
    auto solved = solve_design(params, node_budget);
    if (solved.design) design = std::move(solved.design);
  }
  if (!design) {
    throw ConstructionUnavailable("no construction available for symmetric design " +
                                  params.to_string());
  }
  const auto report = verify_design(*design);
  if (!report.derived_params || *report.derived_params != params) {
    throw std::logic_error("symmetric construction produced the wrong design");
  }
  return std::move(*design);
}

BlockDesign build_family_design(const FamilySpec& spec, const Catalog& catalog,
                                std::uint64_t node_budget) {
  const int n = static_cast<int>(spec.n);
  if (spec.symmetric()) return build_symmetric_design(n, spec.lambda(), catalog, node_budget);
  return build_triple_system(n, spec.lambda(), catalog, node_budget);
}

}  // namespace kgeo
