#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lrf
{
  using state_t = std::uint32_t;
  using state_pair = std::pair<state_t, state_t>;

  /// A binary relation on the states {0, ..., n-1}, stored as a dense
  /// boolean matrix (one bit row per source state).
  ///
  /// All operations are exact.  Binary operations require both operands to
  /// range over the same number of states and throw dimension_mismatch
  /// otherwise.
  class relation
  {
  public:
    relation() = default;
    explicit relation(std::size_t n_states);

    static relation empty(std::size_t n_states) { return relation(n_states); }
    static relation full(std::size_t n_states);
    static relation identity(std::size_t n_states);
    static relation from_pairs(std::size_t n_states,
                               std::span<const state_pair> pairs);

    std::size_t n_states() const noexcept { return n_; }

    bool contains(state_t p, state_t q) const
    {
      return (bits_[p * words_ + q / 64] >> (q % 64)) & 1u;
    }

    void insert(state_t p, state_t q)
    {
      bits_[p * words_ + q / 64] |= std::uint64_t{1} << (q % 64);
    }

    void erase(state_t p, state_t q)
    {
      bits_[p * words_ + q / 64] &= ~(std::uint64_t{1} << (q % 64));
    }

    /// Number of pairs.
    std::size_t size() const noexcept;
    bool is_empty() const noexcept;

    /// All pairs, sorted by source then target.
    std::vector<state_pair> pairs() const;

    /// Calls fn(p, q) for each pair in sorted order.
    template <class Fn>
    void for_each_pair(Fn&& fn) const
    {
      for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t w = 0; w < words_; ++w)
          for (std::uint64_t word = bits_[p * words_ + w]; word;
               word &= word - 1)
            fn(static_cast<state_t>(p),
               static_cast<state_t>(w * 64 + std::countr_zero(word)));
    }

    /// Row p as packed 64-bit words.
    std::span<const std::uint64_t> row(state_t p) const
    {
      return {bits_.data() + p * words_, words_};
    }

    std::span<std::uint64_t> row(state_t p)
    {
      return {bits_.data() + p * words_, words_};
    }

    std::size_t words_per_row() const noexcept { return words_; }

    relation& operator|=(const relation& other);
    relation& operator&=(const relation& other);

    friend bool operator==(const relation&, const relation&) = default;

  private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
  };

  void require_same_dimension(const relation& a, const relation& b);

  relation relation_union(const relation& a, const relation& b);
  relation relation_intersect(const relation& a, const relation& b);
  /// {(x, z) | exists y. x a y and y b z}
  relation relation_compose(const relation& a, const relation& b);
  relation relation_converse(const relation& r);
  /// a is a subset of b.
  bool relation_subset(const relation& a, const relation& b);

  inline relation operator|(relation a, const relation& b) { return a |= b; }
  inline relation operator&(relation a, const relation& b) { return a &= b; }

  bool is_reflexive(const relation& r);
  bool is_symmetric(const relation& r);
  bool is_transitive(const relation& r);
  bool is_equivalence(const relation& r);
}
