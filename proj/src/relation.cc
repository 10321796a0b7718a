#include <lrf/relation.hh>

#include <lrf/error.hh>

#include <algorithm>

namespace lrf
{
  relation::relation(std::size_t n_states)
    : n_(n_states), words_((n_states + 63) / 64), bits_(n_ * words_, 0)
  {
  }

  relation relation::full(std::size_t n_states)
  {
    relation r(n_states);
    for (std::size_t p = 0; p < n_states; ++p)
      for (std::size_t q = 0; q < n_states; ++q)
        r.insert(static_cast<state_t>(p), static_cast<state_t>(q));
    return r;
  }

  relation relation::identity(std::size_t n_states)
  {
    relation r(n_states);
    for (std::size_t p = 0; p < n_states; ++p)
      r.insert(static_cast<state_t>(p), static_cast<state_t>(p));
    return r;
  }

  relation relation::from_pairs(std::size_t n_states,
                                std::span<const state_pair> pairs)
  {
    relation r(n_states);
    for (auto [p, q] : pairs)
      {
        if (p >= n_states || q >= n_states)
          throw error("pair (" + std::to_string(p) + "," + std::to_string(q)
                      + ") out of range for " + std::to_string(n_states)
                      + " states");
        r.insert(p, q);
      }
    return r;
  }

  std::size_t relation::size() const noexcept
  {
    std::size_t total = 0;
    for (auto w : bits_)
      total += std::popcount(w);
    return total;
  }

  bool relation::is_empty() const noexcept
  {
    return std::all_of(bits_.begin(), bits_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  std::vector<state_pair> relation::pairs() const
  {
    std::vector<state_pair> out;
    for_each_pair([&](state_t p, state_t q) { out.emplace_back(p, q); });
    return out;
  }

  relation& relation::operator|=(const relation& other)
  {
    require_same_dimension(*this, other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      bits_[i] |= other.bits_[i];
    return *this;
  }

  relation& relation::operator&=(const relation& other)
  {
    require_same_dimension(*this, other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      bits_[i] &= other.bits_[i];
    return *this;
  }

  void require_same_dimension(const relation& a, const relation& b)
  {
    if (a.n_states() != b.n_states())
      throw dimension_mismatch(a.n_states(), b.n_states());
  }

  relation relation_union(const relation& a, const relation& b)
  {
    return a | b;
  }

  relation relation_intersect(const relation& a, const relation& b)
  {
    return a & b;
  }

  relation relation_compose(const relation& a, const relation& b)
  {
    require_same_dimension(a, b);
    relation out(a.n_states());
    a.for_each_pair([&](state_t x, state_t y) {
      auto dst = out.row(x);
      auto src = b.row(y);
      for (std::size_t w = 0; w < dst.size(); ++w)
        dst[w] |= src[w];
    });
    return out;
  }

  relation relation_converse(const relation& r)
  {
    relation out(r.n_states());
    r.for_each_pair([&](state_t p, state_t q) { out.insert(q, p); });
    return out;
  }

  bool relation_subset(const relation& a, const relation& b)
  {
    require_same_dimension(a, b);
    for (std::size_t p = 0; p < a.n_states(); ++p)
      {
        auto ra = a.row(static_cast<state_t>(p));
        auto rb = b.row(static_cast<state_t>(p));
        for (std::size_t w = 0; w < ra.size(); ++w)
          if (ra[w] & ~rb[w])
            return false;
      }
    return true;
  }

  bool is_reflexive(const relation& r)
  {
    for (std::size_t p = 0; p < r.n_states(); ++p)
      if (!r.contains(static_cast<state_t>(p), static_cast<state_t>(p)))
        return false;
    return true;
  }

  bool is_symmetric(const relation& r)
  {
    return r == relation_converse(r);
  }

  bool is_transitive(const relation& r)
  {
    return relation_subset(relation_compose(r, r), r);
  }

  bool is_equivalence(const relation& r)
  {
    return is_reflexive(r) && is_symmetric(r) && is_transitive(r);
  }
}
