#include <lrf/lts.hh>

#include <lrf/error.hh>

#include <algorithm>
#include <unordered_set>

namespace lrf
{
  std::size_t lts::n_transitions() const noexcept
  {
    std::size_t total = 0;
    for (const auto& s : succ_)
      total += s.size();
    return total;
  }

  std::optional<label_t> lts::find_label(std::string_view text) const
  {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), text);
    if (it == labels_.end() || *it != text)
      return std::nullopt;
    return static_cast<label_t>(it - labels_.begin());
  }

  std::optional<state_t> lts::find_state(std::string_view name) const
  {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      return std::nullopt;
    return static_cast<state_t>(it - names_.begin());
  }

  std::span<const transition> lts::successors(state_t s, label_t a) const
  {
    const auto& out = succ_.at(s);
    auto lo = std::lower_bound(out.begin(), out.end(), transition{a, 0});
    auto hi = std::lower_bound(lo, out.end(), transition{a + 1, 0});
    return {lo, hi};
  }

  lts_builder::lts_builder(std::size_t n_states)
  {
    for (std::size_t i = 0; i < n_states; ++i)
      names_.push_back(std::to_string(i));
  }

  state_t lts_builder::add_state(std::string name)
  {
    names_.push_back(std::move(name));
    return static_cast<state_t>(names_.size() - 1);
  }

  void lts_builder::add_transition(state_t source, std::string label,
                                   state_t target)
  {
    edges_.emplace_back(source, std::move(label), target);
  }

  lts lts_builder::build() const
  {
    lts out;
    const auto n = names_.size();

    std::unordered_set<std::string> seen;
    for (const auto& name : names_)
      if (!seen.insert(name).second)
        throw error("duplicate state name '" + name + "'");

    if (n > 0 && initial_ >= n)
      throw error("initial state " + std::to_string(initial_)
                  + " out of range");

    for (const auto& [src, label, dst] : edges_)
      {
        if (src >= n || dst >= n)
          throw error("transition (" + std::to_string(src) + ", \"" + label
                      + "\", " + std::to_string(dst) + ") out of range for "
                      + std::to_string(n) + " states");
        if (label.empty())
          throw error("empty transition label");
        out.labels_.push_back(label);
      }
    std::sort(out.labels_.begin(), out.labels_.end());
    out.labels_.erase(std::unique(out.labels_.begin(), out.labels_.end()),
                      out.labels_.end());

    out.names_ = names_;
    out.initial_ = initial_;
    out.succ_.resize(n);
    for (const auto& [src, label, dst] : edges_)
      out.succ_[src].push_back({*out.find_label(label), dst});
    for (auto& list : out.succ_)
      {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
      }
    return out;
  }

  void require_over(const lts& sys, const relation& r)
  {
    if (r.n_states() != sys.n_states())
      throw dimension_mismatch(sys.n_states(), r.n_states());
  }
}
