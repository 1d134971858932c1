#include "orbistab/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbistab {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

void validate(const StackyCurve& curve) {
  if (curve.genus < 0) throw Error("genus must be nonnegative");
  if (curve.polarization_degree < 1) throw Error("polarization degree must be positive");
  for (const long long r : curve.stacky_points) {
    if (r < 1) throw Error("stacky multiplicities must be >= 1");
  }
}

DecomposableSheaf DecomposableSheaf::structure_sheaf(const StackyCurve& curve) {
  DecomposableSheaf f;
  f.line_summands.push_back(OrbiLineBundle{0, std::vector<long long>(curve.stacky_points.size(), 0)});
  return f;
}

DecomposableSheaf DecomposableSheaf::line(OrbiLineBundle bundle) {
  DecomposableSheaf f;
  f.line_summands.push_back(std::move(bundle));
  return f;
}

void validate(const DecomposableSheaf& sheaf, const StackyCurve& curve) {
  validate(curve);
  const std::size_t n = curve.stacky_points.size();
  for (const auto& line : sheaf.line_summands) {
    if (line.exponents.size() != n) throw ShapeMismatchError("line bundle exponent count != stacky point count");
  }
  for (const auto& tor : sheaf.torsion_summands) {
    if (tor.location == kGenericPoint) {
      if (tor.rep.modulus != 1) throw Error("generic torsion must have trivial stabilizer");
    } else {
      if (tor.location < 0 || tor.location >= static_cast<long long>(n))
        throw ShapeMismatchError("torsion location out of range");
      if (tor.rep.modulus != curve.stacky_points[static_cast<std::size_t>(tor.location)])
        throw Error("torsion representation modulus must equal the multiplicity of its point");
    }
    if (tor.rep.chars.empty()) throw ZeroSheafError("torsion summand with empty representation");
  }
}

std::string summand_label(const OrbiLineBundle& line) {
  std::ostringstream os;
  os << "O(" << line.base_degree;
  if (!line.exponents.empty()) {
    os << ";";
    for (std::size_t i = 0; i < line.exponents.size(); ++i) {
      if (i) os << ",";
      os << line.exponents[i];
    }
  }
  os << ")";
  return os.str();
}

std::string summand_label(const TorsionSummand& torsion) {
  std::ostringstream os;
  os << "T(";
  if (torsion.location == kGenericPoint) os << "gen";
  else os << "p" << torsion.location;
  os << ";";
  for (std::size_t i = 0; i < torsion.rep.chars.size(); ++i) {
    if (i) os << ",";
    os << torsion.rep.chars[i];
  }
  os << ")";
  return os.str();
}

GeneratingSheafSpec GeneratingSheafSpec::balanced(const StackyCurve& curve) {
  validate(curve);
  GeneratingSheafSpec spec;
  for (const long long r : curve.stacky_points) {
    std::vector<long long> twists(static_cast<std::size_t>(r));
    for (long long l = 0; l < r; ++l) twists[static_cast<std::size_t>(l)] = l;
    spec.per_point_.push_back(std::move(twists));
  }
  return spec;
}

GeneratingSheafSpec GeneratingSheafSpec::level_range(const StackyCurve& curve) {
  validate(curve);
  GeneratingSheafSpec spec;
  for (const long long r : curve.stacky_points) {
    std::vector<long long> twists(static_cast<std::size_t>(r) + 1);
    for (long long l = 0; l <= r; ++l) twists[static_cast<std::size_t>(l)] = l;
    spec.per_point_.push_back(std::move(twists));
  }
  return spec;
}

GeneratingSheafSpec GeneratingSheafSpec::from_twists(std::vector<std::vector<long long>> per_point,
                                                     const StackyCurve& curve) {
  validate(curve);
  if (per_point.size() != curve.stacky_points.size())
    throw ShapeMismatchError("one twist list per stacky point required");
  for (std::size_t i = 0; i < per_point.size(); ++i) {
    const long long r = curve.stacky_points[i];
    if (per_point[i].empty()) throw Error("twist lists must be nonempty");
    // Generating condition: every stabilizer character occurs.
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (const long long l : per_point[i]) seen[static_cast<std::size_t>(((l % r) + r) % r)] = true;
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      throw Error("twist list misses a stabilizer character; sheaf would not be generating");
  }
  GeneratingSheafSpec spec;
  spec.per_point_ = std::move(per_point);
  return spec;
}

long long GeneratingSheafSpec::rank() const {
  long long n = 1;
  for (const auto& t : per_point_) n *= static_cast<long long>(t.size());
  return n;
}

std::vector<OrbiLineBundle> GeneratingSheafSpec::summands() const {
  std::vector<OrbiLineBundle> out;
  const std::size_t npts = per_point_.size();
  std::vector<std::size_t> idx(npts, 0);
  while (true) {
    OrbiLineBundle s;
    s.exponents.resize(npts);
    for (std::size_t i = 0; i < npts; ++i) s.exponents[i] = per_point_[i][idx[i]];
    out.push_back(std::move(s));
    std::size_t i = npts;
    while (i > 0) {
      --i;
      if (++idx[i] < per_point_[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (npts == 0) return out;
  }
}

bool GeneratingSheafSpec::is_balanced(const StackyCurve& curve) const {
  if (per_point_.size() != curve.stacky_points.size())
    throw ShapeMismatchError("one twist list per stacky point required");
  for (std::size_t i = 0; i < per_point_.size(); ++i) {
    const long long r = curve.stacky_points[i];
    std::vector<long long> count(static_cast<std::size_t>(r), 0);
    for (const long long l : per_point_[i]) ++count[static_cast<std::size_t>(((l % r) + r) % r)];
    for (const long long c : count)
      if (c != count[0]) return false;
  }
  return true;
}

const char* to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::stable: return "stable";
    case StabilityVerdict::strictly_semistable: return "strictly_semistable";
    case StabilityVerdict::unstable: return "unstable";
  }
  return "unknown";
}

OrbiLineBundle normalize(const OrbiLineBundle& line, const StackyCurve& curve) {
  validate(curve);
  if (line.exponents.size() != curve.stacky_points.size())
    throw ShapeMismatchError("line bundle exponent count != stacky point count");
  OrbiLineBundle out = line;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    const long long r = curve.stacky_points[i];
    const long long q = floor_div(out.exponents[i], r);
    out.base_degree += q;
    out.exponents[i] -= q * r;
  }
  return out;
}

long long pushforward_degree(const OrbiLineBundle& line, const StackyCurve& curve) {
  validate(curve);
  if (line.exponents.size() != curve.stacky_points.size())
    throw ShapeMismatchError("line bundle exponent count != stacky point count");
  long long d = line.base_degree;
  for (std::size_t i = 0; i < line.exponents.size(); ++i)
    d += floor_div(line.exponents[i], curve.stacky_points[i]);
  return d;
}

long long euler_char(const OrbiLineBundle& line, const StackyCurve& curve) {
  return pushforward_degree(line, curve) + 1 - curve.genus;
}

Rational degree_stacky(const OrbiLineBundle& line, const StackyCurve& curve) {
  validate(curve);
  if (line.exponents.size() != curve.stacky_points.size())
    throw ShapeMismatchError("line bundle exponent count != stacky point count");
  Rational d = line.base_degree;
  for (std::size_t i = 0; i < line.exponents.size(); ++i)
    d += Rational(line.exponents[i], curve.stacky_points[i]);
  return d;
}

Rational degree_stacky(const DecomposableSheaf& sheaf, const StackyCurve& curve) {
  validate(sheaf, curve);
  if (!sheaf.torsion_summands.empty()) throw TorsionNotSupportedError();
  Rational d = 0;
  for (const auto& line : sheaf.line_summands) d += degree_stacky(line, curve);
  return d;
}

namespace {

OrbiLineBundle tensor_dual(const OrbiLineBundle& line, const OrbiLineBundle& dual_of) {
  OrbiLineBundle out = line;
  out.base_degree -= dual_of.base_degree;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] -= dual_of.exponents[i];
  return out;
}

}  // namespace

QPoly modified_hilbert(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                       const StackyCurve& curve) {
  validate(sheaf, curve);
  if (sheaf.is_zero()) throw ZeroSheafError();
  if (generating.per_point_twists().size() != curve.stacky_points.size())
    throw ShapeMismatchError("generating sheaf twist lists do not match the curve");

  const auto e_summands = generating.summands();
  const long long c = curve.polarization_degree;
  const long long g = curve.genus;

  long long const_term = 0;
  long long linear_term = 0;
  for (const auto& line : sheaf.line_summands) {
    for (const auto& ej : e_summands) {
      const_term += pushforward_degree(tensor_dual(line, ej), curve) + 1 - g;
      linear_term += c;
    }
  }
  for (const auto& tor : sheaf.torsion_summands) {
    for (const auto& ej : e_summands) {
      const long long twist =
          tor.location == kGenericPoint ? 0 : ej.exponents[static_cast<std::size_t>(tor.location)];
      const_term += character_multiplicity(tor.rep, twist);
    }
  }
  return QPoly({Rational(const_term), Rational(linear_term)});
}

QPoly modified_hilbert(const OrbiLineBundle& line, const GeneratingSheafSpec& generating,
                       const StackyCurve& curve) {
  return modified_hilbert(DecomposableSheaf::line(line), generating, curve);
}

Rational degree_identity_residual(const DecomposableSheaf& sheaf,
                                  const GeneratingSheafSpec& generating,
                                  const StackyCurve& curve) {
  validate(sheaf, curve);
  if (!sheaf.locally_free()) throw TorsionNotSupportedError();
  if (!generating.is_balanced(curve)) throw UnbalancedGeneratingSheafError();

  const long long r = static_cast<long long>(sheaf.line_summands.size());
  const long long e = generating.rank();
  const Rational alpha0_f = alpha_coeffs(modified_hilbert(sheaf, generating, curve))[0];
  const Rational alpha0_o =
      alpha_coeffs(modified_hilbert(DecomposableSheaf::structure_sheaf(curve), generating, curve))[0];
  const Rational lhs = degree_stacky(sheaf, curve) / Rational(r);
  const Rational rhs = alpha0_f / Rational(r * e) - alpha0_o / Rational(e);
  return lhs - rhs;
}

std::vector<long long> f_e_summand_degrees(const DecomposableSheaf& sheaf,
                                           const GeneratingSheafSpec& generating,
                                           const StackyCurve& curve) {
  validate(sheaf, curve);
  if (!sheaf.torsion_summands.empty()) throw TorsionNotSupportedError();
  const auto e_summands = generating.summands();
  std::vector<long long> degrees;
  degrees.reserve(sheaf.line_summands.size() * e_summands.size());
  for (const auto& line : sheaf.line_summands)
    for (const auto& ej : e_summands)
      degrees.push_back(pushforward_degree(tensor_dual(line, ej), curve));
  return degrees;
}

std::vector<ParabolicLevel> parabolic_levels(const DecomposableSheaf& sheaf,
                                             const StackyCurve& curve,
                                             std::size_t point_index) {
  validate(sheaf, curve);
  if (!sheaf.torsion_summands.empty()) throw TorsionNotSupportedError();
  if (point_index >= curve.stacky_points.size())
    throw ShapeMismatchError("stacky point index out of range");
  const long long r = curve.stacky_points[point_index];

  std::vector<ParabolicLevel> levels;
  levels.reserve(static_cast<std::size_t>(r) + 1);
  for (long long l = 0; l <= r; ++l) {
    ParabolicLevel lev;
    lev.level = l;
    for (const auto& line : sheaf.line_summands) {
      OrbiLineBundle twisted = line;
      twisted.exponents[point_index] -= l;
      lev.degrees.push_back(pushforward_degree(twisted, curve));
    }
    levels.push_back(std::move(lev));
  }
  return levels;
}

OrbiLineBundle line_from_parabolic(const std::vector<ParabolicLevel>& levels) {
  if (levels.size() < 2) throw NotRealizableError("need levels 0..r with r >= 1");
  std::vector<long long> d(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].level != static_cast<long long>(i))
      throw NotRealizableError("levels must be listed as 0..r in order");
    if (levels[i].degrees.size() != 1)
      throw NotRealizableError("expected the level data of a single line bundle");
    d[i] = levels[i].degrees[0];
  }
  // Shape must be e,...,e,e-1,...,e-1 with the final level one below level 0.
  const long long e = d[0];
  if (d.back() != e - 1) throw NotRealizableError("level r must equal level 0 shifted by -1");
  long long k = -1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == e && k == static_cast<long long>(i) - 1) k = static_cast<long long>(i);
    else if (d[i] != e - 1)
      throw NotRealizableError("level degrees must descend once by exactly 1");
  }
  return OrbiLineBundle{e, {k}};  // 0 <= k < r by construction
}

Rational mu_hat(const OrbiLineBundle& line, const GeneratingSheafSpec& generating,
                const StackyCurve& curve) {
  return slope(modified_hilbert(line, generating, curve));
}

StabilityVerdict semistable(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                            const StackyCurve& curve) {
  validate(sheaf, curve);
  if (sheaf.is_zero()) throw ZeroSheafError();
  if (!sheaf.torsion_summands.empty()) throw TorsionNotSupportedError();
  const auto groups = hn_direct(sheaf, generating, curve);
  if (groups.size() > 1) return StabilityVerdict::unstable;
  return sheaf.line_summands.size() == 1 ? StabilityVerdict::stable
                                         : StabilityVerdict::strictly_semistable;
}

std::vector<HnGroup> hn_direct(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                               const StackyCurve& curve) {
  validate(sheaf, curve);
  if (sheaf.is_zero()) throw ZeroSheafError();
  if (!sheaf.torsion_summands.empty()) throw TorsionNotSupportedError();

  std::map<Rational, HnGroup, std::greater<Rational>> by_slope;
  for (std::size_t i = 0; i < sheaf.line_summands.size(); ++i) {
    const QPoly p = modified_hilbert(sheaf.line_summands[i], generating, curve);
    auto& group = by_slope[slope(p)];
    group.summands.push_back(i);
    group.graded += p;
  }
  std::vector<HnGroup> out;
  out.reserve(by_slope.size());
  for (auto& entry : by_slope) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace orbistab
