#include <lrf/lattice.hh>

#include <lrf/progress.hh>

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace lrf
{
  namespace
  {
    using kind = lattice_violation::kind;

    std::size_t popcount(std::span<const std::uint64_t> row)
    {
      std::size_t total = 0;
      for (auto w : row)
        total += std::popcount(w);
      return total;
    }

    // Least element of the set `bounds`, where above[u] is the set of
    // elements >= u.  The least element u of a set of upper bounds has
    // above[u] == bounds, and no other member has as many elements above.
    std::optional<element_t>
    least_of(const relation& above, const std::vector<std::uint64_t>& bounds,
             const std::vector<std::size_t>& above_count)
    {
      std::optional<element_t> best;
      for (std::size_t w = 0; w < bounds.size(); ++w)
        for (auto word = bounds[w]; word; word &= word - 1)
          {
            auto u = static_cast<element_t>(w * 64 + std::countr_zero(word));
            if (!best || above_count[u] > above_count[*best])
              best = u;
          }
      if (!best)
        return std::nullopt;
      auto row = above.row(*best);
      if (!std::equal(row.begin(), row.end(), bounds.begin()))
        return std::nullopt;
      return best;
    }

    std::vector<std::uint64_t> row_and(std::span<const std::uint64_t> a,
                                       std::span<const std::uint64_t> b)
    {
      std::vector<std::uint64_t> out(a.size());
      for (std::size_t w = 0; w < a.size(); ++w)
        out[w] = a[w] & b[w];
      return out;
    }

    std::string describe_all(const std::vector<lattice_violation>& vs,
                             std::span<const std::string> names)
    {
      std::ostringstream os;
      os << "not a lattice (" << vs.size() << " violation"
         << (vs.size() == 1 ? "" : "s") << ")";
      for (std::size_t i = 0; i < vs.size() && i < 8; ++i)
        os << "; " << vs[i].describe(names);
      if (vs.size() > 8)
        os << "; ...";
      return os.str();
    }
  }

  std::string
  lattice_violation::describe(std::span<const std::string> names) const
  {
    auto n = [&](element_t e) {
      return e < names.size() ? names[e] : std::to_string(e);
    };
    switch (what)
      {
      case kind::empty:
        return "no elements";
      case kind::duplicate_name:
        return "duplicate element name '" + n(a) + "'";
      case kind::not_reflexive:
        return "not reflexive at " + n(a);
      case kind::not_antisymmetric:
        return n(a) + " <= " + n(b) + " and " + n(b) + " <= " + n(a);
      case kind::not_transitive:
        return n(a) + " <= " + n(b) + " <= " + n(c) + " but not " + n(a)
               + " <= " + n(c);
      case kind::no_join:
        return "no least upper bound of " + n(a) + " and " + n(b);
      case kind::no_meet:
        return "no greatest lower bound of " + n(a) + " and " + n(b);
      case kind::no_top:
        return "no top element";
      case kind::no_bottom:
        return "no bottom element";
      }
    return "unknown violation";
  }

  std::optional<element_t> finite_lattice::find(std::string_view name) const
  {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      return std::nullopt;
    return static_cast<element_t>(it - names_.begin());
  }

  element_t finite_lattice::join_preimage(const relation& rel,
                                          element_t b) const
  {
    require_same_dimension(order_, rel);
    element_t acc = bottom_;
    for (element_t a = 0; a < size(); ++a)
      if (rel.contains(a, b))
        acc = join(acc, a);
    return acc;
  }

  finite_lattice validate_lattice(std::vector<std::string> names,
                                  relation order)
  {
    const auto n = names.size();
    std::vector<lattice_violation> vs;
    if (order.n_states() != n)
      throw dimension_mismatch(n, order.n_states());
    if (n == 0)
      {
        vs.push_back({kind::empty});
        throw lattice_axiom_error(vs, describe_all(vs, names));
      }

    std::unordered_set<std::string> seen;
    for (element_t a = 0; a < n; ++a)
      if (!seen.insert(names[a]).second)
        vs.push_back({kind::duplicate_name, a});

    for (element_t a = 0; a < n; ++a)
      if (!order.contains(a, a))
        vs.push_back({kind::not_reflexive, a});
    for (element_t a = 0; a < n; ++a)
      for (element_t b = a + 1; b < n; ++b)
        if (order.contains(a, b) && order.contains(b, a))
          vs.push_back({kind::not_antisymmetric, a, b});
    // a <= b <= c: every element above b must be above a.
    order.for_each_pair([&](element_t a, element_t b) {
      auto ra = order.row(a);
      auto rb = order.row(b);
      for (std::size_t w = 0; w < ra.size(); ++w)
        if (auto missing = rb[w] & ~ra[w])
          {
            auto c = static_cast<element_t>(w * 64
                                            + std::countr_zero(missing));
            vs.push_back({kind::not_transitive, a, b, c});
            return;
          }
    });
    if (!vs.empty())
      throw lattice_axiom_error(vs, describe_all(vs, names));

    const auto below = relation_converse(order);
    std::vector<std::size_t> above_count(n), below_count(n);
    for (element_t a = 0; a < n; ++a)
      {
        above_count[a] = popcount(order.row(a));
        below_count[a] = popcount(below.row(a));
      }

    finite_lattice l;
    l.join_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    for (element_t a = 0; a < n; ++a)
      for (element_t b = a; b < n; ++b)
        {
          auto j = least_of(order, row_and(order.row(a), order.row(b)),
                            above_count);
          if (j)
            l.join_[a * n + b] = l.join_[b * n + a] = *j;
          else
            vs.push_back({kind::no_join, a, b});
          auto m = least_of(below, row_and(below.row(a), below.row(b)),
                            below_count);
          if (m)
            l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
          else
            vs.push_back({kind::no_meet, a, b});
        }

    if (std::count(below_count.begin(), below_count.end(), n) != 1)
      vs.push_back({kind::no_top});
    if (std::count(above_count.begin(), above_count.end(), n) != 1)
      vs.push_back({kind::no_bottom});
    if (!vs.empty())
      throw lattice_axiom_error(vs, describe_all(vs, names));

    l.top_ = static_cast<element_t>(
      std::find(below_count.begin(), below_count.end(), n)
      - below_count.begin());
    l.bottom_ = static_cast<element_t>(
      std::find(above_count.begin(), above_count.end(), n)
      - above_count.begin());
    l.names_ = std::move(names);
    l.order_ = std::move(order);
    return l;
  }

  relation reflexive_transitive_closure(const relation& r)
  {
    auto out = r | relation::identity(r.n_states());
    for (;;)
      {
        auto next = out | relation_compose(out, out);
        if (next == out)
          return out;
        out = std::move(next);
      }
  }

  progression_check is_progression(const finite_lattice& l,
                                   const relation& rel)
  {
    require_same_dimension(l.order(), rel);
    progression_check out;
    auto closed =
      relation_compose(relation_compose(l.order(), rel), l.order());
    closed.for_each_pair([&](element_t a, element_t b) {
      if (out.condition1 && !rel.contains(a, b))
        {
          out.condition1 = false;
          out.missing_pair = {a, b};
        }
    });
    for (element_t b = 0; b < l.size() && out.condition2; ++b)
      if (!rel.contains(l.join_preimage(rel, b), b))
        {
          out.condition2 = false;
          out.bad_target = b;
        }
    out.holds = out.condition1 && out.condition2;
    return out;
  }

  lattice_progression lattice_progression::make(const finite_lattice& l,
                                                relation rel)
  {
    auto check = is_progression(l, rel);
    if (!check.holds)
      {
        if (!check.condition1)
          throw error("not a progression: (" + l.name(check.missing_pair->first)
                      + ", " + l.name(check.missing_pair->second)
                      + ") is forced by closure under the order but absent");
        throw error("not a progression: the join of the pre-image of "
                    + l.name(*check.bad_target) + " is not related to it");
      }
    return lattice_progression(std::move(rel));
  }

  lattice_progression close_to_progression(const finite_lattice& l,
                                           relation seed)
  {
    require_same_dimension(l.order(), seed);
    auto rel = std::move(seed);
    for (;;)
      {
        auto next =
          relation_compose(relation_compose(l.order(), rel), l.order());
        for (element_t b = 0; b < l.size(); ++b)
          next.insert(l.join_preimage(next, b), b);
        if (next == rel)
          break;
        rel = std::move(next);
      }
    return lattice_progression::make(l, std::move(rel));
  }

  lattice_chain z_chain(const finite_lattice& l, const lattice_progression& r)
  {
    lattice_chain out;
    out.zs.push_back(l.top());
    for (;;)
      {
        auto next = l.join_preimage(r.rel(), out.zs.back());
        if (next == out.zs.back())
          break;
        if (!l.leq(next, out.zs.back()))
          throw std::logic_error("z-chain is not decreasing");
        out.zs.push_back(next);
      }
    out.stable_index = out.zs.size() - 1;
    return out;
  }

  element_t companion_at(const finite_lattice& l, const lattice_chain& chain,
                         element_t x)
  {
    element_t acc = l.top();
    for (auto z : chain.zs)
      if (l.leq(x, z))
        acc = l.meet(acc, z);
    return acc;
  }

  element_map companion_table(const finite_lattice& l,
                              const lattice_chain& chain)
  {
    element_map out(l.size());
    for (element_t x = 0; x < l.size(); ++x)
      out[x] = companion_at(l, chain, x);
    return out;
  }

  element_t s_of(const finite_lattice& l, const lattice_progression& r,
                 element_t x)
  {
    return l.join_preimage(r.rel(), x);
  }

  bool is_monotone(const finite_lattice& l, const element_map& f)
  {
    bool ok = true;
    l.order().for_each_pair([&](element_t a, element_t b) {
      if (!l.leq(f[a], f[b]))
        ok = false;
    });
    return ok;
  }

  bool is_R_monotone(const finite_lattice& l, const relation& r,
                     const element_map& f)
  {
    bool ok = true;
    l.order().for_each_pair([&](element_t a, element_t b) {
      if (ok && r.contains(a, b)
          && !(l.leq(f[a], f[b]) && r.contains(f[a], f[b])))
        ok = false;
    });
    return ok;
  }

  bool is_compatible(const finite_lattice& l, const lattice_progression& r,
                     const element_map& f)
  {
    for (element_t x = 0; x < l.size(); ++x)
      if (!l.leq(f[s_of(l, r, x)], s_of(l, r, f[x])))
        return false;
    return true;
  }

  namespace
  {
    // Calls fn(f) for every function on n elements, in lexicographic order
    // of the value table.
    template <class Fn>
    void for_each_function(std::size_t n, Fn&& fn)
    {
      element_map f(n, 0);
      for (;;)
        {
          fn(f);
          std::size_t i = n;
          while (i > 0 && f[i - 1] + 1 == n)
            f[--i] = 0;
          if (i == 0)
            return;
          ++f[i - 1];
        }
    }

    void require_enumerable(const finite_lattice& l)
    {
      if (l.size() > max_brute_force_lattice)
        throw enumeration_limit(
          "function enumeration is capped at "
          + std::to_string(max_brute_force_lattice) + " elements, lattice has "
          + std::to_string(l.size()));
    }
  }

  brute_force_result brute_force_largest(const finite_lattice& l,
                                         const lattice_progression& r,
                                         largest_mode mode)
  {
    require_enumerable(l);
    auto passes = [&](const element_map& f) {
      if (mode == largest_mode::r_monotone)
        return is_R_monotone(l, r.rel(), f);
      return is_monotone(l, f) && is_compatible(l, r, f);
    };

    brute_force_result out;
    out.largest.assign(l.size(), l.bottom());
    for_each_function(l.size(), [&](const element_map& f) {
      ++out.candidates;
      if (!passes(f))
        return;
      ++out.survivors;
      for (std::size_t x = 0; x < f.size(); ++x)
        out.largest[x] = l.join(out.largest[x], f[x]);
    });
    out.largest_in_class = out.survivors > 0 && passes(out.largest);
    return out;
  }

  separation_census census_separation(const finite_lattice& l,
                                      const lattice_progression& r)
  {
    require_enumerable(l);
    separation_census out;
    for_each_function(l.size(), [&](const element_map& f) {
      if (!is_monotone(l, f))
        return;
      ++out.monotone;
      const bool rm = is_R_monotone(l, r.rel(), f);
      const bool co = is_compatible(l, r, f);
      if (rm && co)
        ++out.both;
      else if (rm)
        ++out.r_monotone_only;
      else if (co)
        ++out.compatible_only;
    });
    return out;
  }

  element_t element_of(const relation& r)
  {
    const auto n = r.n_states();
    if (n > max_bridge_states)
      throw enumeration_limit("relation lattice elements are capped at "
                              + std::to_string(max_bridge_states)
                              + " states");
    element_t e = 0;
    r.for_each_pair([&](state_t p, state_t q) {
      e |= element_t{1} << (p * n + q);
    });
    return e;
  }

  relation relation_of(std::size_t n_states, element_t e)
  {
    relation r(n_states);
    for (state_t p = 0; p < n_states; ++p)
      for (state_t q = 0; q < n_states; ++q)
        if ((e >> (p * n_states + q)) & 1u)
          r.insert(p, q);
    return r;
  }

  relation_lattice lts_to_lattice(const lts& sys, std::size_t max_states)
  {
    const auto n = sys.n_states();
    if (n > std::min(max_states, max_bridge_states))
      throw enumeration_limit(
        "relation lattice needs at most "
        + std::to_string(std::min(max_states, max_bridge_states))
        + " states, system has " + std::to_string(n));

    const std::size_t size = std::size_t{1} << (n * n);
    std::vector<relation> rels;
    std::vector<std::string> names;
    for (element_t e = 0; e < size; ++e)
      {
        rels.push_back(relation_of(n, e));
        std::string name = "{";
        for (auto [p, q] : rels.back().pairs())
          name += (name.size() > 1 ? ",(" : "(") + std::to_string(p) + ","
                  + std::to_string(q) + ")";
        names.push_back(name + "}");
      }

    relation order(size);
    relation progress(size);
    for (element_t x = 0; x < size; ++x)
      for (element_t y = 0; y < size; ++y)
        {
          if ((x & ~y) == 0)
            order.insert(x, y);
          if (progresses(sys, rels[x], rels[y]))
            progress.insert(x, y);
        }

    auto lattice = validate_lattice(std::move(names), std::move(order));
    auto prog = lattice_progression::make(lattice, std::move(progress));
    return {n, std::move(lattice), std::move(prog)};
  }
}
