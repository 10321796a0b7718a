#pragma once

// Reference implementations used only by the tests.  They work from the
// flat transition triples and the textbook definitions, sharing no code
// with the library's algorithms.

#include <lrf/lts.hh>
#include <lrf/relation.hh>

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle
{
  using triple = std::tuple<lrf::state_t, std::string, lrf::state_t>;

  inline std::vector<triple> triples(const lrf::lts& sys)
  {
    std::vector<triple> out;
    for (lrf::state_t p = 0; p < sys.n_states(); ++p)
      for (auto t : sys.successors(p))
        out.emplace_back(p, sys.label(t.label), t.target);
    return out;
  }

  /// Both clauses checked literally: for all (p,q) in r, every move of one
  /// side is answered by an equally labelled move of the other with the
  /// derivatives related by s.
  inline bool progresses(const std::vector<triple>& ts,
                         const lrf::relation& r, const lrf::relation& s)
  {
    for (auto [p, q] : r.pairs())
      {
        for (const auto& [src, a, dst] : ts)
          {
            if (src == p)
              {
                bool found = false;
                for (const auto& [src2, b, dst2] : ts)
                  found = found || (src2 == q && b == a && s.contains(dst, dst2));
                if (!found)
                  return false;
              }
            if (src == q)
              {
                bool found = false;
                for (const auto& [src2, b, dst2] : ts)
                  found = found || (src2 == p && b == a && s.contains(dst2, dst));
                if (!found)
                  return false;
              }
          }
      }
    return true;
  }

  inline lrf::relation from_mask(std::size_t n, std::uint64_t mask)
  {
    lrf::relation r(n);
    for (std::size_t bit = 0; bit < n * n; ++bit)
      if ((mask >> bit) & 1u)
        r.insert(lrf::state_t(bit / n), lrf::state_t(bit % n));
    return r;
  }

  /// ⋃ {X | X ↣ s} over all 2^(n^2) relations X.
  inline lrf::relation union_progressing(const lrf::lts& sys,
                                         const lrf::relation& s)
  {
    const auto n = sys.n_states();
    const auto ts = triples(sys);
    lrf::relation out(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m)
      {
        auto x = from_mask(n, m);
        if (progresses(ts, x, s))
          out |= x;
      }
    return out;
  }

  /// Bisimilarity by naive signature refinement of the state partition.
  inline lrf::relation partition_refinement(const lrf::lts& sys)
  {
    const auto n = sys.n_states();
    const auto ts = triples(sys);
    std::vector<std::size_t> block(n, 0);
    for (;;)
      {
        std::map<std::pair<std::size_t,
                           std::set<std::pair<std::string, std::size_t>>>,
                 std::size_t>
          ids;
        std::vector<std::size_t> next(n);
        for (lrf::state_t p = 0; p < n; ++p)
          {
            std::set<std::pair<std::string, std::size_t>> sig;
            for (const auto& [src, a, dst] : ts)
              if (src == p)
                sig.emplace(a, block[dst]);
            auto key = std::make_pair(block[p], sig);
            auto it = ids.try_emplace(key, ids.size()).first;
            next[p] = it->second;
          }
        std::set<std::size_t> before(block.begin(), block.end());
        std::set<std::size_t> after(next.begin(), next.end());
        block = next;
        if (before.size() == after.size())
          break;
      }
    lrf::relation out(n);
    for (lrf::state_t p = 0; p < n; ++p)
      for (lrf::state_t q = 0; q < n; ++q)
        if (block[p] == block[q])
          out.insert(p, q);
    return out;
  }
}
