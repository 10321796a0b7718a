#pragma once

#include <lrf/relation.hh>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace lrf
{
  using label_t = std::uint32_t;

  struct transition
  {
    label_t label;
    state_t target;

    friend auto operator<=>(const transition&, const transition&) = default;
  };

  /// A finite labelled transition system.
  ///
  /// Labels are interned into dense indices in lexicographic order of their
  /// text, so label index order and label text order agree.  The alphabet
  /// holds exactly the labels that occur on some transition.  Successor
  /// lists are duplicate-free and sorted by (label, target).
  ///
  /// Values are immutable once built; use lts_builder to make one.
  class lts
  {
  public:
    lts() = default;

    std::size_t n_states() const noexcept { return names_.size(); }
    std::size_t n_labels() const noexcept { return labels_.size(); }
    std::size_t n_transitions() const noexcept;

    const std::string& state_name(state_t s) const { return names_.at(s); }
    std::span<const std::string> state_names() const noexcept
    {
      return names_;
    }

    const std::string& label(label_t a) const { return labels_.at(a); }
    std::span<const std::string> labels() const noexcept { return labels_; }

    std::optional<label_t> find_label(std::string_view text) const;
    std::optional<state_t> find_state(std::string_view name) const;

    /// Outgoing transitions of s, sorted by (label, target).
    std::span<const transition> successors(state_t s) const
    {
      return succ_.at(s);
    }

    /// Successors of s carrying label a.
    std::span<const transition> successors(state_t s, label_t a) const;

    /// Recorded from the input format; none of the algorithms use it.
    state_t initial_state() const noexcept { return initial_; }

    friend bool operator==(const lts&, const lts&) = default;

  private:
    friend class lts_builder;

    std::vector<std::string> names_;
    std::vector<std::string> labels_;
    std::vector<std::vector<transition>> succ_;
    state_t initial_ = 0;
  };

  class lts_builder
  {
  public:
    lts_builder() = default;

    /// Adds states named "0", "1", ... continuing from the current count.
    explicit lts_builder(std::size_t n_states);

    state_t add_state(std::string name);
    void add_transition(state_t source, std::string label, state_t target);
    void set_initial(state_t s) { initial_ = s; }

    std::size_t n_states() const noexcept { return names_.size(); }

    /// Validates and canonicalizes.  Throws lrf::error on duplicate state
    /// names, empty labels, or out-of-range indices.
    lts build() const;

  private:
    std::vector<std::string> names_;
    std::vector<std::tuple<state_t, std::string, state_t>> edges_;
    state_t initial_ = 0;
  };

  /// Throws dimension_mismatch unless r ranges over the states of sys.
  void require_over(const lts& sys, const relation& r);
}
