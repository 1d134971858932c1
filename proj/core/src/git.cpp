#include "orbistab/git.hpp"

namespace orbistab {

Rational hm_weight(const std::vector<WeightEntry>& entries, long long l) {
  Rational w = 0;
  for (const auto& entry : entries) w += Rational(entry.weight) * entry.poly(Rational(l));
  return w;
}

bool weights_dimension_sum(const std::vector<WeightEntry>& entries, long long total_dim) {
  long long sum = 0;
  for (const auto& entry : entries) sum += entry.dim;
  return sum == total_dim;
}

bool weights_special_linear(const std::vector<WeightEntry>& entries) {
  long long sum = 0;
  for (const auto& entry : entries) sum += entry.weight * entry.dim;
  return sum == 0;
}

bool git_semistable_check(long long total_dim, const QPoly& total,
                          const std::vector<SubspacePair>& pairs, long long l, bool strict) {
  const Rational pl = total(Rational(l));
  for (const auto& pair : pairs) {
    const Rational lhs = Rational(total_dim) * pair.poly(Rational(l));
    const Rational rhs = Rational(pair.dim) * pl;
    if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
  }
  return true;
}

bool git_semistable_check_eventual(long long total_dim, const QPoly& total,
                                   const std::vector<SubspacePair>& pairs, bool strict) {
  for (const auto& pair : pairs) {
    const QPoly lhs = Rational(total_dim) * pair.poly;
    const QPoly rhs = Rational(pair.dim) * total;
    const auto cmp = compare_at_infinity(lhs, rhs);
    if (strict ? cmp != std::strong_ordering::greater : cmp == std::strong_ordering::less)
      return false;
  }
  return true;
}

bool validation_injectivity(const std::vector<SubspacePair>& pairs) {
  for (const auto& pair : pairs)
    if (pair.poly.is_zero() && pair.dim > 0) return false;
  return true;
}

}  // namespace orbistab
