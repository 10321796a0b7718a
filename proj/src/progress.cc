#include <lrf/progress.hh>

namespace lrf
{
  namespace
  {
    // Some a-successor of `from` is related (in the given orientation) to
    // `derivative` by s.
    bool matched(const lts& sys, state_t from, label_t a, state_t derivative,
                 const relation& s, bool from_is_right)
    {
      for (auto t : sys.successors(from, a))
        if (from_is_right ? s.contains(derivative, t.target)
                          : s.contains(t.target, derivative))
          return true;
      return false;
    }

    template <class OnFail>
    bool check_pair(const lts& sys, state_t p, state_t q, const relation& s,
                    OnFail&& on_fail)
    {
      bool ok = true;
      for (auto t : sys.successors(p))
        if (!matched(sys, q, t.label, t.target, s, true))
          {
            ok = false;
            if (!on_fail(progress_violation{p, q, side::left, t.label, p,
                                            t.target}))
              return false;
          }
      for (auto t : sys.successors(q))
        if (!matched(sys, p, t.label, t.target, s, false))
          {
            ok = false;
            if (!on_fail(progress_violation{p, q, side::right, t.label, q,
                                            t.target}))
              return false;
          }
      return ok;
    }
  }

  progress_diagnosis progresses_to(const lts& sys, const relation& r,
                                   const relation& s)
  {
    require_over(sys, r);
    require_over(sys, s);
    progress_diagnosis out;
    r.for_each_pair([&](state_t p, state_t q) {
      check_pair(sys, p, q, s, [&](const progress_violation& v) {
        out.violations.push_back(v);
        return true;
      });
    });
    out.holds = out.violations.empty();
    return out;
  }

  bool pair_progresses(const lts& sys, state_t p, state_t q,
                       const relation& s)
  {
    return check_pair(sys, p, q, s,
                      [](const progress_violation&) { return false; });
  }

  bool progresses(const lts& sys, const relation& r, const relation& s)
  {
    require_over(sys, r);
    require_over(sys, s);
    bool ok = true;
    r.for_each_pair([&](state_t p, state_t q) {
      if (ok && !pair_progresses(sys, p, q, s))
        ok = false;
    });
    return ok;
  }

  relation largest_progressing_to(const lts& sys, const relation& s)
  {
    require_over(sys, s);
    const auto n = sys.n_states();
    relation out(n);
    for (state_t p = 0; p < n; ++p)
      for (state_t q = 0; q < n; ++q)
        if (pair_progresses(sys, p, q, s))
          out.insert(p, q);
    return out;
  }
}
