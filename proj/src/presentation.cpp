#include "monoidlab/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "monoidlab/common.hpp"

namespace monoidlab {

  namespace {

    Word parse_word(std::string const& text, std::size_t line) {
      std::istringstream ss(text);
      Word               w;
      std::string        sym;
      while (ss >> sym) {
        w.push_back(sym);
      }
      if (w.empty()) {
        throw SyntaxError("empty side of a relation (use 1 for the empty word)", line);
      }
      if (w.size() == 1 && w[0] == "1") {
        w.clear();
      } else if (std::find(w.begin(), w.end(), "1") != w.end()) {
        throw SyntaxError("'1' may only appear alone", line);
      }
      return w;
    }

    Word renamed(Word w, std::map<std::string, std::string> const& names) {
      for (auto& s : w) {
        if (auto it = names.find(s); it != names.end()) {
          s = it->second;
        }
      }
      return w;
    }

  }  // namespace

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    return fmt::format("{}", fmt::join(w, " "));
  }

  void check_presentation(Presentation const& p) {
    std::set<std::string> gens;
    for (auto const& g : p.generators) {
      if (g == "1" || g == "=" || g.empty()) {
        throw BadParameter(fmt::format("'{}' cannot be a generator", g));
      }
      if (!gens.insert(g).second) {
        throw BadParameter(fmt::format("generator '{}' declared twice", g));
      }
    }
    for (auto const& r : p.relations) {
      for (auto const* w : {&r.lhs, &r.rhs}) {
        for (auto const& s : *w) {
          if (!gens.contains(s)) {
            throw BadParameter(fmt::format("relation uses undeclared symbol '{}'", s));
          }
        }
      }
    }
  }

  SemidirectPresentation build_semidirect_presentation(Presentation const&    pA,
                                                       Presentation const&    pB,
                                                       GeneratorAction const& action) {
    check_presentation(pA);
    check_presentation(pB);
    for (auto const& y : pB.generators) {
      for (auto const& x : pA.generators) {
        auto it = action.find({y, x});
        if (it == action.end()) {
          throw UndefinedAction(y, x);
        }
        for (auto const& s : it->second) {
          if (std::find(pA.generators.begin(), pA.generators.end(), s)
              == pA.generators.end()) {
            throw BadParameter(
                fmt::format("image of ({}, {}) uses '{}', which is not in X", y, x, s));
          }
        }
      }
    }

    SemidirectPresentation out;
    std::set<std::string>  taken(pA.generators.begin(), pA.generators.end());
    taken.insert(pB.generators.begin(), pB.generators.end());
    std::map<std::string, std::string> names;
    for (auto const& y : pB.generators) {
      if (std::find(pA.generators.begin(), pA.generators.end(), y) == pA.generators.end()) {
        continue;
      }
      std::string fresh = "B_" + y;
      while (taken.contains(fresh)) {
        fresh = "B_" + fresh;
      }
      taken.insert(fresh);
      names[y] = fresh;
      out.renamed.emplace_back(y, fresh);
    }

    auto& p = out.presentation;
    p.generators = pA.generators;
    for (auto const& y : pB.generators) {
      p.generators.push_back(names.contains(y) ? names[y] : y);
    }
    p.relations = pA.relations;
    for (auto const& r : pB.relations) {
      p.relations.push_back({renamed(r.lhs, names), renamed(r.rhs, names)});
    }
    for (auto const& y : pB.generators) {
      std::string const ys = names.contains(y) ? names[y] : y;
      for (auto const& x : pA.generators) {
        Word rhs = action.at({y, x});
        rhs.push_back(ys);
        p.relations.push_back({Word{ys, x}, std::move(rhs)});
        ++out.action_relations;
      }
    }
    return out;
  }

  void write_presentation(std::ostream& os, Presentation const& p) {
    os << fmt::format("{}", fmt::join(p.generators, " ")) << '\n';
    for (auto const& r : p.relations) {
      os << to_string(r.lhs) << " = " << to_string(r.rhs) << '\n';
    }
  }

  Presentation read_presentation(std::istream& is) {
    Presentation p;
    std::string  line;
    std::size_t  lineno = 0;
    bool         header = false;
    while (std::getline(is, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') {
        continue;
      }
      if (!header) {
        std::istringstream ss(line);
        std::string        g;
        while (ss >> g) {
          p.generators.push_back(g);
        }
        header = true;
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos || line.find('=', eq + 1) != std::string::npos) {
        throw SyntaxError("expected exactly one '='", lineno);
      }
      p.relations.push_back(
          {parse_word(line.substr(0, eq), lineno), parse_word(line.substr(eq + 1), lineno)});
    }
    if (!header) {
      throw SyntaxError("missing generator line", lineno + 1);
    }
    check_presentation(p);
    return p;
  }

}  // namespace monoidlab
