#pragma once

#include <lrf/lts.hh>

#include <cstddef>
#include <string>

namespace lrf
{
  /// T_n: states 0..n, one label "t", and i -t-> j exactly when i > j.
  /// It is the finite slice of the ordinal construction that separates
  /// ~n from ~(n+1).
  struct ordinal_lts
  {
    std::size_t n = 0;
    lts system;
  };

  ordinal_lts build_T(std::size_t n);

  struct gallery_verdict
  {
    bool passed = true;
    std::size_t epsilon = 0;
    /// Empty on success.
    std::string first_discrepancy;
  };

  /// On T_n checks, for all a < b <= n and every index g up to eps,
  /// that (a, b) ∈ ~g iff g <= a.  On T_(n+1) checks (n, n+1) ∈ ~n and
  /// (n, n+1) ∉ ~(n+1).
  gallery_verdict verify_gallery(std::size_t n);
}
