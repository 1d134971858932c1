#include "orbistab/gerbe.hpp"

#include <algorithm>

namespace orbistab {

namespace {

long long mod_band(long long x, long long a) { return ((x % a) + a) % a; }

}  // namespace

long long GerbeSheaf::twist_multiplicity(long long chi) const {
  long long m = 0;
  for (const long long t : character_twists)
    if (mod_band(t, band_order) == mod_band(chi, band_order)) ++m;
  return m;
}

void validate(const GerbeSheaf& sheaf) {
  if (sheaf.band_order < 1) throw Error("band order must be positive");
  validate(sheaf.base);
  if (sheaf.character_twists.empty()) throw Error("gerbe twist list must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(sheaf.band_order), false);
  for (const long long t : sheaf.character_twists)
    seen[static_cast<std::size_t>(mod_band(t, sheaf.band_order))] = true;
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw Error("gerbe twists miss a character; sheaf would not be generating");

  bool any = false;
  for (const auto& [chi, component] : sheaf.components) {
    if (chi < 0 || chi >= sheaf.band_order) throw Error("component character out of range");
    if (component.is_zero()) continue;
    validate(component, sheaf.base);
    any = true;
  }
  if (!any) throw ZeroSheafError("gerbe sheaf with no nonempty component");
}

std::vector<GerbeSplitPart> split(const GerbeSheaf& sheaf) {
  validate(sheaf);
  std::vector<GerbeSplitPart> parts;
  for (const auto& [chi, component] : sheaf.components) {
    if (component.is_zero()) continue;
    const QPoly p = modified_hilbert(component, sheaf.base_generating, sheaf.base);
    parts.push_back(GerbeSplitPart{chi, Rational(sheaf.twist_multiplicity(chi)) * p});
  }
  return parts;
}

QPoly total_poly(const GerbeSheaf& sheaf) {
  validate(sheaf);
  // Accumulated twist by twist; equals the sum of the split parts.
  QPoly total;
  for (const long long t : sheaf.character_twists) {
    const auto it = sheaf.components.find(mod_band(t, sheaf.band_order));
    if (it == sheaf.components.end() || it->second.is_zero()) continue;
    total += modified_hilbert(it->second, sheaf.base_generating, sheaf.base);
  }
  return total;
}

bool poly_split_check(const GerbeSheaf& sheaf) {
  QPoly sum;
  for (const auto& part : split(sheaf)) sum += part.poly;
  return sum == total_poly(sheaf);
}

StabilityVerdict semistable_gerbe(const GerbeSheaf& sheaf) {
  validate(sheaf);
  std::size_t nonempty = 0;
  StabilityVerdict last = StabilityVerdict::stable;
  bool have_reduced = false;
  QPoly common_reduced;
  for (const auto& [chi, component] : sheaf.components) {
    if (component.is_zero()) continue;
    ++nonempty;
    last = semistable(component, sheaf.base_generating, sheaf.base);
    if (last == StabilityVerdict::unstable) return StabilityVerdict::unstable;
    const QPoly reduced = reduced_poly(modified_hilbert(component, sheaf.base_generating, sheaf.base));
    if (!have_reduced) {
      have_reduced = true;
      common_reduced = reduced;
    } else if (!(reduced == common_reduced)) {
      return StabilityVerdict::unstable;
    }
  }
  if (nonempty == 1 && last == StabilityVerdict::stable) return StabilityVerdict::stable;
  return StabilityVerdict::strictly_semistable;
}

std::vector<QPoly> component_label(const GerbeSheaf& sheaf) {
  validate(sheaf);
  std::vector<QPoly> label(static_cast<std::size_t>(sheaf.band_order));
  for (const auto& part : split(sheaf)) label[static_cast<std::size_t>(part.character)] = part.poly;
  return label;
}

GerbeSheaf twist(const GerbeSheaf& sheaf, long long s) {
  validate(sheaf);
  GerbeSheaf out;
  out.band_order = sheaf.band_order;
  out.base = sheaf.base;
  out.base_generating = sheaf.base_generating;
  out.character_twists.reserve(sheaf.character_twists.size());
  for (const long long t : sheaf.character_twists)
    out.character_twists.push_back(mod_band(t + s, sheaf.band_order));
  for (const auto& [chi, component] : sheaf.components)
    out.components[mod_band(chi + s, sheaf.band_order)] = component;
  return out;
}

}  // namespace orbistab
