#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affcells/cells.hpp"

namespace props {

struct Tally {
  std::string name;
  long checked = 0;
  long violations = 0;
  std::string first;  // description of the first violation
  void record(bool ok, const std::string& what);
};

/// Random elements as products of random generators, from a fixed seed.
std::vector<affcells::AffineElt> random_elements(const affcells::AffineWeylGroup& g, int count, int max_word,
                                                  std::uint32_t seed);

Tally group_axioms(const affcells::AffineWeylGroup& g, std::uint32_t seed, int samples);
Tally length_laws(const affcells::AffineWeylGroup& g, std::uint32_t seed, int samples);
Tally alcove_roundtrip(const affcells::AffineWeylGroup& g, std::uint32_t seed, int samples);
/// Ball lengths against the closed form and against breadth-first layers.
Tally ball_lengths(const affcells::Ball& ball);
Tally bruhat_axioms(const affcells::BruhatOrder& order, const affcells::Ball& ball, std::uint32_t seed, int samples);
Tally kl_bounds(const affcells::KLTable& kl);
Tally cells_under_inversion(const affcells::CellPartition& p, const affcells::Ball& ball);

}  // namespace props
