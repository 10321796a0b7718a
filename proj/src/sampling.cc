#include <lrf/sampling.hh>

#include <lrf/progress.hh>

#include <string>

namespace lrf
{
  lts random_lts(rng_t& rng, std::size_t n_states, std::size_t n_labels,
                 double density)
  {
    std::bernoulli_distribution coin(density);
    lts_builder b(n_states);
    for (state_t p = 0; p < n_states; ++p)
      for (std::size_t a = 0; a < n_labels; ++a)
        for (state_t q = 0; q < n_states; ++q)
          if (coin(rng))
            b.add_transition(p, std::string(1, char('a' + a)), q);
    return b.build();
  }

  relation random_relation(rng_t& rng, std::size_t n_states, double density)
  {
    std::bernoulli_distribution coin(density);
    relation r(n_states);
    for (state_t p = 0; p < n_states; ++p)
      for (state_t q = 0; q < n_states; ++q)
        if (coin(rng))
          r.insert(p, q);
    return r;
  }

  relation random_subrelation(rng_t& rng, const relation& r, double keep)
  {
    std::bernoulli_distribution coin(keep);
    relation out(r.n_states());
    r.for_each_pair([&](state_t p, state_t q) {
      if (coin(rng))
        out.insert(p, q);
    });
    return out;
  }

  relation random_superrelation(rng_t& rng, const relation& r, double add)
  {
    std::bernoulli_distribution coin(add);
    relation out = r;
    for (state_t p = 0; p < r.n_states(); ++p)
      for (state_t q = 0; q < r.n_states(); ++q)
        if (!r.contains(p, q) && coin(rng))
          out.insert(p, q);
    return out;
  }

  namespace
  {
    state_t pick(rng_t& rng, std::span<const transition> ts)
    {
      std::uniform_int_distribution<std::size_t> d(0, ts.size() - 1);
      return ts[d(rng)].target;
    }
  }

  std::pair<relation, relation> respectful_sample(rng_t& rng, const lts& sys,
                                                  double density)
  {
    const auto n = sys.n_states();
    const auto movable = largest_progressing_to(sys, relation::full(n));
    auto r = random_subrelation(rng, movable, density);
    relation s = r;
    r.for_each_pair([&](state_t p, state_t q) {
      for (auto t : sys.successors(p))
        s.insert(t.target, pick(rng, sys.successors(q, t.label)));
      for (auto t : sys.successors(q))
        s.insert(pick(rng, sys.successors(p, t.label)), t.target);
    });
    return {std::move(r), random_superrelation(rng, s, density / 2)};
  }

  lattice_progression random_progression(rng_t& rng, const finite_lattice& l,
                                         double density)
  {
    return close_to_progression(l, random_relation(rng, l.size(), density));
  }

  finite_lattice chain_lattice(std::size_t length)
  {
    std::vector<std::string> names;
    relation order(length);
    for (state_t a = 0; a < length; ++a)
      {
        names.push_back(std::to_string(a));
        for (state_t b = a; b < length; ++b)
          order.insert(a, b);
      }
    return validate_lattice(std::move(names), std::move(order));
  }

  finite_lattice diamond_lattice()
  {
    std::vector<state_pair> pairs{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                  {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    return validate_lattice({"bot", "x", "y", "top"},
                            relation::from_pairs(4, pairs));
  }

  finite_lattice powerset_lattice(std::size_t bits)
  {
    const std::size_t size = std::size_t{1} << bits;
    std::vector<std::string> names;
    relation order(size);
    for (state_t x = 0; x < size; ++x)
      {
        std::string name = "{";
        for (std::size_t i = 0; i < bits; ++i)
          if ((x >> i) & 1u)
            name += (name.size() > 1 ? "," : "") + std::to_string(i);
        names.push_back(name + "}");
        for (state_t y = 0; y < size; ++y)
          if ((x & ~y) == 0)
            order.insert(x, y);
      }
    return validate_lattice(std::move(names), std::move(order));
  }

  finite_lattice pentagon_lattice()
  {
    // bot=0, a=1, b=2, c=3, top=4
    relation covers(5);
    covers.insert(0, 1);
    covers.insert(1, 2);
    covers.insert(2, 4);
    covers.insert(0, 3);
    covers.insert(3, 4);
    return validate_lattice({"bot", "a", "b", "c", "top"},
                            reflexive_transitive_closure(covers));
  }
}
