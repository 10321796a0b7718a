#include <lrf/documents.hh>

#include <lrf/error.hh>

#include <charconv>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <vector>

namespace lrf
{
  namespace
  {
    using json = nlohmann::json;

    bool looks_like_json(std::string_view text)
    {
      auto b = text.find_first_not_of(" \t\r\n");
      return b != std::string_view::npos && text[b] == '{';
    }

    std::optional<std::size_t> as_index(std::string_view token)
    {
      std::size_t value = 0;
      auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{}
          || ptr != token.data() + token.size())
        return std::nullopt;
      return value;
    }

    state_t resolve(std::span<const std::string> names,
                    std::string_view token, std::size_t line)
    {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == token)
          return static_cast<state_t>(i);
      if (auto i = as_index(token); i && *i < names.size())
        return static_cast<state_t>(*i);
      throw parse_error(line, "unknown endpoint '" + std::string(token) + "'");
    }

    state_t resolve_json(std::span<const std::string> names, const json& v)
    {
      if (v.is_number_unsigned())
        {
          auto i = v.get<std::size_t>();
          if (i >= names.size())
            throw parse_error(0, "index " + std::to_string(i)
                                   + " out of range");
          return static_cast<state_t>(i);
        }
      if (v.is_string())
        return resolve(names, v.get<std::string>(), 0);
      throw parse_error(0, "endpoint must be a name or an index");
    }

    json parse_json(std::string_view text)
    {
      try
        {
          return json::parse(text);
        }
      catch (const json::parse_error& e)
        {
          throw parse_error(0, std::string("invalid JSON: ") + e.what());
        }
    }

    std::vector<state_pair> json_pairs(std::span<const std::string> names,
                                       const json& doc)
    {
      std::vector<state_pair> out;
      if (!doc.contains("pairs"))
        return out;
      const auto& pairs = doc.at("pairs");
      if (!pairs.is_array())
        throw parse_error(0, "'pairs' must be an array");
      for (const auto& p : pairs)
        {
          if (!p.is_array() || p.size() != 2)
            throw parse_error(0, "each pair must be a two-element array");
          out.emplace_back(resolve_json(names, p[0]),
                           resolve_json(names, p[1]));
        }
      return out;
    }

    std::vector<state_pair> text_pairs(std::span<const std::string> names,
                                       std::string_view text)
    {
      std::vector<state_pair> out;
      std::istringstream in{std::string(text)};
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(in, line))
        {
          ++line_no;
          if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
          std::istringstream fields(line);
          std::string a, b, extra;
          if (!(fields >> a))
            continue;
          if (!(fields >> b) || (fields >> extra))
            throw parse_error(line_no, "expected two endpoints per line");
          out.emplace_back(resolve(names, a, line_no),
                           resolve(names, b, line_no));
        }
      return out;
    }

    relation_document parse_named(std::span<const std::string> names,
                                  std::string_view text)
    {
      relation_document doc{"R", relation(names.size())};
      std::vector<state_pair> pairs;
      if (looks_like_json(text))
        {
          auto j = parse_json(text);
          if (!j.is_object())
            throw parse_error(0, "relation document must be a JSON object");
          if (j.contains("name"))
            doc.name = j.at("name").get<std::string>();
          pairs = json_pairs(names, j);
        }
      else
        pairs = text_pairs(names, text);
      for (auto [p, q] : pairs)
        doc.pairs.insert(p, q);
      return doc;
    }
  }

  relation_document parse_relation_document(std::string_view text,
                                            const lts& sys)
  {
    return parse_named(sys.state_names(), text);
  }

  relation parse_relation(std::string_view text, const lts& sys)
  {
    return parse_relation_document(text, sys).pairs;
  }

  relation parse_element_relation(std::string_view text,
                                  const finite_lattice& l)
  {
    return parse_named(l.names(), text).pairs;
  }

  finite_lattice parse_lattice(std::string_view text)
  {
    auto j = parse_json(text);
    if (!j.is_object() || !j.contains("elements"))
      throw parse_error(0, "lattice document needs an 'elements' array");
    std::vector<std::string> names;
    try
      {
        names = j.at("elements").get<std::vector<std::string>>();
      }
    catch (const json::exception&)
      {
        throw parse_error(0, "'elements' must be an array of strings");
      }
    std::string mode = j.value("order", "cover");
    if (mode != "cover" && mode != "full")
      throw parse_error(0, "'order' must be \"cover\" or \"full\"");

    relation order(names.size());
    for (auto [a, b] : json_pairs(names, j))
      order.insert(a, b);
    if (mode == "cover")
      order = reflexive_transitive_closure(order);
    else
      order |= relation::identity(names.size());
    return validate_lattice(std::move(names), std::move(order));
  }

  std::string format_relation(std::span<const std::string> names,
                              const relation& r)
  {
    std::string out = "{";
    bool first = true;
    r.for_each_pair([&](state_t p, state_t q) {
      out += first ? "(" : ", (";
      out += names[p] + "," + names[q] + ")";
      first = false;
    });
    return out + "}";
  }

  std::string format_relation(const lts& sys, const relation& r)
  {
    require_over(sys, r);
    return format_relation(sys.state_names(), r);
  }
}
