#include <lrf/enumeration.hh>

#include <lrf/error.hh>
#include <lrf/progress.hh>

#include <cstdint>
#include <string>

namespace lrf
{
  namespace
  {
    void require_small(const lts& sys)
    {
      if (sys.n_states() > max_enumeration_states)
        throw enumeration_limit("relation enumeration is capped at "
                                + std::to_string(max_enumeration_states)
                                + " states, system has "
                                + std::to_string(sys.n_states()));
    }

    template <class Fn>
    void for_each_relation(std::size_t n, Fn&& fn)
    {
      const std::uint64_t count = std::uint64_t{1} << (n * n);
      for (std::uint64_t mask = 0; mask < count; ++mask)
        {
          relation x(n);
          for (std::size_t bit = 0; bit < n * n; ++bit)
            if ((mask >> bit) & 1u)
              x.insert(static_cast<state_t>(bit / n),
                       static_cast<state_t>(bit % n));
          fn(x);
        }
    }
  }

  relation union_of_progressing(const lts& sys, const relation& s)
  {
    require_small(sys);
    require_over(sys, s);
    relation out(sys.n_states());
    for_each_relation(sys.n_states(), [&](const relation& x) {
      if (progresses_to(sys, x, s).holds)
        out |= x;
    });
    return out;
  }

  relation union_of_self_progressing(const lts& sys)
  {
    require_small(sys);
    relation out(sys.n_states());
    for_each_relation(sys.n_states(), [&](const relation& x) {
      if (progresses_to(sys, x, x).holds)
        out |= x;
    });
    return out;
  }

  std::vector<lts> all_systems(std::size_t n_states, std::size_t n_labels)
  {
    const std::size_t slots = n_states * n_labels * n_states;
    if (slots > 16)
      throw enumeration_limit("too many systems to enumerate: 2^"
                              + std::to_string(slots));
    std::vector<lts> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask)
      {
        lts_builder b(n_states);
        std::size_t bit = 0;
        for (state_t p = 0; p < n_states; ++p)
          for (std::size_t a = 0; a < n_labels; ++a)
            for (state_t q = 0; q < n_states; ++q, ++bit)
              if ((mask >> bit) & 1u)
                b.add_transition(p, std::string(1, char('a' + a)), q);
        out.push_back(b.build());
      }
    return out;
  }
}
