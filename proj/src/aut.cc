#include <lrf/aut.hh>

#include <lrf/error.hh>

#include <charconv>
#include <optional>
#include <sstream>

namespace lrf
{
  namespace
  {
    std::string_view trim(std::string_view s)
    {
      const auto ws = " \t\r\f\v";
      auto b = s.find_first_not_of(ws);
      if (b == std::string_view::npos)
        return {};
      auto e = s.find_last_not_of(ws);
      return s.substr(b, e - b + 1);
    }

    std::size_t parse_index(std::string_view token, std::size_t line,
                            const char* what)
    {
      token = trim(token);
      std::size_t value = 0;
      auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{}
          || ptr != token.data() + token.size())
        throw parse_error(line, std::string("expected ") + what + ", got '"
                                  + std::string(token) + "'");
      return value;
    }

    // Strips the surrounding parentheses of a "( ... )" tuple.
    std::string_view tuple_body(std::string_view s, std::size_t line)
    {
      s = trim(s);
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw parse_error(line, "expected a parenthesized tuple");
      return s.substr(1, s.size() - 2);
    }

    aut_document parse_header(std::string_view s, std::size_t line)
    {
      s = trim(s);
      if (s.substr(0, 3) != "des")
        throw parse_error(line, "header must start with 'des'");
      auto body = tuple_body(s.substr(3), line);
      auto c1 = body.find(',');
      auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
      if (c2 == std::string_view::npos
          || body.find(',', c2 + 1) != std::string_view::npos)
        throw parse_error(line, "header must have three fields");
      aut_document doc;
      doc.initial_state = parse_index(body.substr(0, c1), line,
                                      "initial state");
      doc.transition_count =
        parse_index(body.substr(c1 + 1, c2 - c1 - 1), line,
                    "transition count");
      doc.state_count = parse_index(body.substr(c2 + 1), line, "state count");
      return doc;
    }

    aut_line parse_transition(std::string_view s, std::size_t line)
    {
      auto body = tuple_body(s, line);
      auto c1 = body.find(',');
      if (c1 == std::string_view::npos)
        throw parse_error(line, "expected (source, label, target)");
      aut_line out;
      out.source = parse_index(body.substr(0, c1), line, "source state");

      auto rest = body.substr(c1 + 1);
      auto open = rest.find_first_not_of(" \t");
      std::string_view after;
      if (open != std::string_view::npos && rest[open] == '"')
        {
          auto close = rest.rfind('"');
          if (close == open)
            throw parse_error(line, "unterminated quote");
          out.label = std::string(rest.substr(open + 1, close - open - 1));
          after = trim(rest.substr(close + 1));
          if (after.empty() || after.front() != ',')
            throw parse_error(line, "expected ',' after label");
          after = after.substr(1);
        }
      else
        {
          auto c2 = rest.rfind(',');
          if (c2 == std::string_view::npos)
            throw parse_error(line, "expected (source, label, target)");
          out.label = std::string(trim(rest.substr(0, c2)));
          after = rest.substr(c2 + 1);
        }
      if (out.label.empty())
        throw parse_error(line, "empty label");
      out.target = parse_index(after, line, "target state");
      return out;
    }
  }

  aut_document parse_aut_document(std::string_view text)
  {
    std::optional<aut_document> doc;
    std::size_t line_no = 0;
    std::size_t last_line = 0;
    while (!text.empty())
      {
        auto nl = text.find('\n');
        auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{}
                                            : text.substr(nl + 1);
        ++line_no;
        if (trim(raw).empty())
          continue;
        last_line = line_no;
        if (!doc)
          {
            doc = parse_header(raw, line_no);
            continue;
          }
        auto t = parse_transition(raw, line_no);
        if (t.source >= doc->state_count || t.target >= doc->state_count)
          throw parse_error(line_no,
                            "state index out of range (state count "
                              + std::to_string(doc->state_count) + ")");
        doc->body.push_back(std::move(t));
        if (doc->body.size() > doc->transition_count)
          throw parse_error(line_no, "more transitions than the header's "
                                       + std::to_string(doc->transition_count));
      }
    if (!doc)
      throw parse_error(1, "missing 'des' header");
    if (doc->body.size() != doc->transition_count)
      throw parse_error(last_line, "header declares "
                                     + std::to_string(doc->transition_count)
                                     + " transitions, found "
                                     + std::to_string(doc->body.size()));
    if (doc->initial_state >= doc->state_count)
      throw parse_error(1, "initial state out of range");
    return *doc;
  }

  lts to_lts(const aut_document& doc)
  {
    lts_builder b(doc.state_count);
    b.set_initial(static_cast<state_t>(doc.initial_state));
    for (const auto& t : doc.body)
      b.add_transition(static_cast<state_t>(t.source), t.label,
                       static_cast<state_t>(t.target));
    return b.build();
  }

  lts parse_aut(std::string_view text)
  {
    return to_lts(parse_aut_document(text));
  }

  std::string render_aut(const lts& sys)
  {
    std::ostringstream os;
    os << "des (" << sys.initial_state() << ", " << sys.n_transitions()
       << ", " << sys.n_states() << ")\n";
    for (state_t p = 0; p < sys.n_states(); ++p)
      for (auto t : sys.successors(p))
        os << "(" << p << ", \"" << sys.label(t.label) << "\", " << t.target
           << ")\n";
    return os.str();
  }
}
