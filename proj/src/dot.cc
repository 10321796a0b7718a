#include <lrf/dot.hh>

#include <sstream>

namespace lrf
{
  namespace
  {
    std::string quote(const std::string& s)
    {
      std::string out = "\"";
      for (char c : s)
        {
          if (c == '"' || c == '\\')
            out += '\\';
          out += c;
        }
      return out + '"';
    }
  }

  std::string render_dot(const lts& sys, const std::string& graph_name)
  {
    std::ostringstream os;
    os << "digraph " << quote(graph_name) << " {\n"
       << "  rankdir=LR;\n"
       << "  node [shape=circle];\n";
    for (state_t p = 0; p < sys.n_states(); ++p)
      os << "  " << p << " [label=" << quote(sys.state_name(p))
         << (p == sys.initial_state() ? ", shape=doublecircle" : "")
         << "];\n";
    for (state_t p = 0; p < sys.n_states(); ++p)
      for (auto t : sys.successors(p))
        os << "  " << p << " -> " << t.target
           << " [label=" << quote(sys.label(t.label)) << "];\n";
    os << "}\n";
    return os.str();
  }
}
