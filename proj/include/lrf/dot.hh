#pragma once

#include <lrf/lts.hh>

#include <string>

namespace lrf
{
  /// Graphviz rendering of the transition graph, one edge per transition in
  /// canonical order.
  std::string render_dot(const lts& sys, const std::string& graph_name = "lts");
}
