#pragma once

#include <lrf/error.hh>
#include <lrf/lts.hh>
#include <lrf/relation.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrf
{
  /// Index of a lattice element.  Binary relations on elements reuse
  /// lrf::relation with elements in place of states.
  using element_t = state_t;

  /// A function on lattice elements, given as its table of values.
  using element_map = std::vector<element_t>;

  struct lattice_violation
  {
    enum class kind
    {
      empty,
      duplicate_name,
      not_reflexive,
      not_antisymmetric,
      not_transitive,
      no_join,
      no_meet,
      no_top,
      no_bottom,
    };

    kind what;
    element_t a = 0;
    element_t b = 0;
    element_t c = 0;

    std::string describe(std::span<const std::string> names) const;
  };

  class lattice_axiom_error : public error
  {
  public:
    lattice_axiom_error(std::vector<lattice_violation> violations,
                        const std::string& message)
      : error(message), violations_(std::move(violations))
    {
    }

    const std::vector<lattice_violation>& violations() const noexcept
    {
      return violations_;
    }

  private:
    std::vector<lattice_violation> violations_;
  };

  /// A finite lattice with cached binary join and meet tables.  Being
  /// finite, non-empty and closed under binary joins and meets, it is
  /// complete; joins and meets of arbitrary subsets are folds.
  class finite_lattice
  {
  public:
    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(element_t e) const { return names_.at(e); }
    std::span<const std::string> names() const noexcept { return names_; }
    std::optional<element_t> find(std::string_view name) const;

    bool leq(element_t a, element_t b) const { return order_.contains(a, b); }
    const relation& order() const noexcept { return order_; }

    element_t join(element_t a, element_t b) const
    {
      return join_[a * size() + b];
    }
    element_t meet(element_t a, element_t b) const
    {
      return meet_[a * size() + b];
    }
    element_t top() const noexcept { return top_; }
    element_t bottom() const noexcept { return bottom_; }

    /// Join of {a | (a, b) ∈ rel}; bottom when empty.
    element_t join_preimage(const relation& rel, element_t b) const;

  private:
    friend finite_lattice validate_lattice(std::vector<std::string> names,
                                           relation order);

    std::vector<std::string> names_;
    relation order_;
    std::vector<element_t> join_;
    std::vector<element_t> meet_;
    element_t top_ = 0;
    element_t bottom_ = 0;
  };

  /// Checks that `order` is a partial order on the named elements with all
  /// binary joins and meets, a top, and a bottom.  Throws
  /// lattice_axiom_error listing every violation found.
  finite_lattice validate_lattice(std::vector<std::string> names,
                                  relation order);

  relation reflexive_transitive_closure(const relation& r);

  struct progression_check
  {
    bool holds = true;
    /// ≤ ∘ rel ∘ ≤ ⊆ rel.  missing_pair is the first pair forced but absent.
    bool condition1 = true;
    std::optional<std::pair<element_t, element_t>> missing_pair;
    /// The join of every pre-image lies in that pre-image.  bad_target is
    /// the first b for which it does not.
    bool condition2 = true;
    std::optional<element_t> bad_target;
  };

  progression_check is_progression(const finite_lattice& l,
                                   const relation& rel);

  /// A relation on a lattice known to satisfy both progression conditions.
  class lattice_progression
  {
  public:
    /// Throws lrf::error if rel is not a progression on l.
    static lattice_progression make(const finite_lattice& l, relation rel);

    const relation& rel() const noexcept { return rel_; }

  private:
    explicit lattice_progression(relation rel) : rel_(std::move(rel)) {}
    relation rel_;
  };

  /// Smallest fixpoint above seed of: close under ≤ on both sides, then add
  /// (⋁ pre-image of b, b) for every b.  The relation only grows, so this
  /// terminates.
  lattice_progression close_to_progression(const finite_lattice& l,
                                           relation seed);

  /// z_0 = top, z_(k+1) = ⋁ {a | a rel z_k}, up to the first repeat.
  struct lattice_chain
  {
    std::vector<element_t> zs;
    /// Least k with z_(k+1) = z_k; zs holds z_0 .. z_stable_index.
    std::size_t stable_index = 0;
  };

  lattice_chain z_chain(const finite_lattice& l,
                        const lattice_progression& r);

  /// ⋀ {z_k | x ≤ z_k}.
  element_t companion_at(const finite_lattice& l, const lattice_chain& chain,
                         element_t x);

  element_map companion_table(const finite_lattice& l,
                              const lattice_chain& chain);

  /// s_R(x) = ⋁ {a | a R x}.
  element_t s_of(const finite_lattice& l, const lattice_progression& r,
                 element_t x);

  bool is_monotone(const finite_lattice& l, const element_map& f);

  /// a ≤ b and a R b imply f(a) ≤ f(b) and f(a) R f(b).
  bool is_R_monotone(const finite_lattice& l, const relation& r,
                     const element_map& f);

  /// f(s_R(x)) ≤ s_R(f(x)) for all x.  Monotonicity is not part of this
  /// check; see is_monotone.
  bool is_compatible(const finite_lattice& l, const lattice_progression& r,
                     const element_map& f);

  enum class largest_mode
  {
    r_monotone,
    /// monotone and s_R-compatible
    compatible,
  };

  struct brute_force_result
  {
    element_map largest;
    std::size_t candidates = 0;
    std::size_t survivors = 0;
    /// The pointwise join of the survivors is itself a survivor.
    bool largest_in_class = false;
  };

  inline constexpr std::size_t max_brute_force_lattice = 5;

  /// Pointwise join of every function on the elements that passes the
  /// mode's filter.  Throws enumeration_limit above
  /// max_brute_force_lattice elements.
  brute_force_result brute_force_largest(const finite_lattice& l,
                                         const lattice_progression& r,
                                         largest_mode mode);

  /// Among monotone functions, how many satisfy only one of the two
  /// conditions.  Used to look for separating examples.
  struct separation_census
  {
    std::size_t monotone = 0;
    std::size_t r_monotone_only = 0;
    std::size_t compatible_only = 0;
    std::size_t both = 0;
  };

  separation_census census_separation(const finite_lattice& l,
                                      const lattice_progression& r);

  /// The lattice of binary relations on the states of an LTS, ordered by
  /// inclusion, with the progress relation as progression.  Element e
  /// encodes the relation containing (p, q) iff bit p*n+q of e is set.
  struct relation_lattice
  {
    std::size_t n_states = 0;
    finite_lattice lattice;
    lattice_progression progression;
  };

  inline constexpr std::size_t max_bridge_states = 3;

  /// Throws enumeration_limit if the system has more than
  /// min(max_states, max_bridge_states) states.
  relation_lattice lts_to_lattice(const lts& sys,
                                  std::size_t max_states = max_bridge_states);

  element_t element_of(const relation& r);
  relation relation_of(std::size_t n_states, element_t e);
}
