#include <lrf/ordinal_gallery.hh>

#include <lrf/stratification.hh>

#include <sstream>

namespace lrf
{
  ordinal_lts build_T(std::size_t n)
  {
    lts_builder b(n + 1);
    for (state_t i = 0; i <= n; ++i)
      for (state_t j = 0; j < i; ++j)
        b.add_transition(i, "t", j);
    return {n, b.build()};
  }

  gallery_verdict verify_gallery(std::size_t n)
  {
    gallery_verdict out;
    auto fail = [&](const std::string& what) {
      if (out.passed)
        {
          out.passed = false;
          out.first_discrepancy = what;
        }
    };

    const auto seq = compute_strata(build_T(n).system);
    out.epsilon = seq.epsilon();
    for (std::size_t g = 0; g <= seq.epsilon() + 1; ++g)
      for (state_t b = 0; b <= n; ++b)
        for (state_t a = 0; a < b; ++a)
          {
            const bool related = stratum(seq, g).contains(a, b);
            if (related != (g <= a))
              {
                std::ostringstream os;
                os << "T_" << n << ": (" << a << "," << b << ") "
                   << (related ? "in" : "not in") << " ~" << g;
                fail(os.str());
              }
          }

    const auto next = compute_strata(build_T(n + 1).system);
    const auto a = static_cast<state_t>(n);
    if (!stratum(next, n).contains(a, a + 1))
      fail("T_" + std::to_string(n + 1) + ": (" + std::to_string(n) + ","
           + std::to_string(n + 1) + ") not in ~" + std::to_string(n));
    if (stratum(next, n + 1).contains(a, a + 1))
      fail("T_" + std::to_string(n + 1) + ": (" + std::to_string(n) + ","
           + std::to_string(n + 1) + ") in ~" + std::to_string(n + 1));
    return out;
  }
}
