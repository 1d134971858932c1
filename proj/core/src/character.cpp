#include "orbistab/character.hpp"

#include <algorithm>
#include <sstream>

namespace orbistab {

CharacterRep CharacterRep::make(long long modulus, std::vector<long long> chars) {
  if (modulus < 1) throw Error("stabilizer order must be positive");
  for (const long long c : chars) {
    if (c < 0 || c >= modulus) throw Error("character out of range [0, modulus)");
  }
  std::sort(chars.begin(), chars.end());
  return CharacterRep{modulus, std::move(chars)};
}

long long character_multiplicity(const CharacterRep& rep, long long twist) {
  const long long a = rep.modulus;
  const long long target = ((twist % a) + a) % a;
  return static_cast<long long>(std::count(rep.chars.begin(), rep.chars.end(), target));
}

long long modified_length(const CharacterRep& rep, const std::vector<long long>& twists) {
  long long n = 0;
  for (const long long t : twists) n += character_multiplicity(rep, t);
  return n;
}

PointTable point_table(const std::vector<std::pair<std::string, CharacterRep>>& points,
                       const std::vector<long long>& twists) {
  PointTable table;
  table.twists = twists;
  table.rows.reserve(points.size());
  for (const auto& [label, rep] : points) {
    PointTableRow row;
    row.label = label;
    row.counts.reserve(twists.size());
    for (const long long t : twists) row.counts.push_back(character_multiplicity(rep, t));
    row.total = modified_length(rep, twists);
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool distinguishes(const std::vector<CharacterRep>& points,
                   const std::vector<long long>& twists) {
  std::vector<std::vector<long long>> vectors;
  vectors.reserve(points.size());
  for (const auto& rep : points) {
    std::vector<long long> v;
    v.reserve(twists.size());
    for (const long long t : twists) v.push_back(character_multiplicity(rep, t));
    vectors.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (vectors[i] == vectors[j]) return false;
  return true;
}

std::string to_csv(const PointTable& table) {
  std::ostringstream os;
  os << "label";
  for (const long long t : table.twists) os << ",n_" << t;
  os << ",n\n";
  for (const auto& row : table.rows) {
    os << row.label;
    for (const long long c : row.counts) os << "," << c;
    os << "," << row.total << "\n";
  }
  return os.str();
}

std::vector<std::pair<std::string, CharacterRep>> p332_points() {
  return {
      {"P(1)", CharacterRep::make(1, {0})},
      {"P(2)", CharacterRep::make(2, {0})},
      {"P(3)", CharacterRep::make(3, {0})},
      // The double point supported at the mu_3 orbifold point; the {0, 2}
      // representation is the one whose counts match both tables.
      {"2P(3)", CharacterRep::make(3, {0, 2})},
  };
}

std::vector<long long> p332_minimal_twists() { return {0, 1, 2}; }

std::vector<long long> p332_separating_twists() { return {0, 2, 4, 3}; }

}  // namespace orbistab
