#pragma once

#include <lrf/lattice.hh>
#include <lrf/lts.hh>
#include <lrf/relation.hh>

#include <random>
#include <utility>

namespace lrf
{
  /// Every sampler draws from this engine so runs are reproducible from a
  /// seed.
  using rng_t = std::mt19937_64;

  /// Each of the n_states * n_labels * n_states possible transitions is
  /// present with probability `density`.  Labels are "a", "b", ...
  lts random_lts(rng_t& rng, std::size_t n_states, std::size_t n_labels,
                 double density);

  relation random_relation(rng_t& rng, std::size_t n_states, double density);

  /// Keeps each pair of r with probability `keep`.
  relation random_subrelation(rng_t& rng, const relation& r, double keep);

  /// Adds each pair outside r with probability `add`.
  relation random_superrelation(rng_t& rng, const relation& r, double add);

  /// A pair (r, s) with r ⊆ s and r ↣ s.  r is drawn among pairs that can
  /// progress at all (those in ~1); s collects one randomly chosen matching
  /// derivative pair per transition of r's pairs, plus r itself, plus
  /// random extra pairs.
  std::pair<relation, relation> respectful_sample(rng_t& rng, const lts& sys,
                                                  double density);

  /// A progression on l obtained by closing a random seed.
  lattice_progression random_progression(rng_t& rng, const finite_lattice& l,
                                         double density);

  /// 0 < 1 < ... < length-1.
  finite_lattice chain_lattice(std::size_t length);
  /// bot < x, y < top with x, y incomparable.
  finite_lattice diamond_lattice();
  /// Subsets of a bits-element set under inclusion.
  finite_lattice powerset_lattice(std::size_t bits);
  /// bot < a < b < top, bot < c < top.
  finite_lattice pentagon_lattice();
}
