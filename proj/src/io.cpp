#include "monoidlab/io.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "monoidlab/catalog.hpp"

namespace monoidlab {

  namespace {

    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
          ++i;
        }
        std::size_t const start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
          ++i;
        }
        if (i > start) {
          out.push_back({line.substr(start, i - start), start + 1});
        }
      }
      return out;
    }

    std::vector<std::string_view> split_lines(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (start < text.size()) {
        auto const end = text.find('\n', start);
        if (end == std::string_view::npos) {
          out.push_back(text.substr(start));
          break;
        }
        out.push_back(text.substr(start, end - start));
        start = end + 1;
      }
      return out;
    }

    long long parse_integer(Token const& tok, std::size_t line) {
      long long  v   = 0;
      char const* b  = tok.text.data();
      char const* e  = b + tok.text.size();
      auto const res = std::from_chars(b, e, v);
      if (res.ec != std::errc{} || res.ptr != e) {
        throw SyntaxError(fmt::format("expected an integer, got '{}'", tok.text), line, tok.column);
      }
      return v;
    }

    bool blank(std::string_view line) {
      return tokenize(line).empty();
    }

    bool is_comment(std::string_view line) {
      auto const toks = tokenize(line);
      return !toks.empty() && toks.front().text.front() == '#';
    }

    // Rows of integers after a header, followed only by comments or blanks.
    std::vector<std::vector<long long>> read_rows(std::vector<std::string_view> const& lines,
                                                  std::size_t                          first,
                                                  std::size_t                          count,
                                                  std::size_t                          width) {
      std::vector<std::vector<long long>> rows;
      for (std::size_t r = 0; r < count; ++r) {
        std::size_t const ln = first + r + 1;  // 1-based
        if (first + r >= lines.size()) {
          throw SyntaxError(fmt::format("expected {} rows, found {}", count, r), ln);
        }
        auto const toks = tokenize(lines[first + r]);
        if (toks.size() != width) {
          std::size_t const col = toks.size() > width ? toks[width].column : lines[first + r].size() + 1;
          throw SyntaxError(fmt::format("expected {} entries, found {}", width, toks.size()), ln, col);
        }
        std::vector<long long> row;
        for (auto const& t : toks) {
          row.push_back(parse_integer(t, ln));
        }
        rows.push_back(std::move(row));
      }
      for (std::size_t k = first + count; k < lines.size(); ++k) {
        if (!blank(lines[k]) && !is_comment(lines[k])) {
          throw SyntaxError("unexpected content after the table", k + 1, tokenize(lines[k])[0].column);
        }
      }
      return rows;
    }

    std::vector<long long> read_header(std::vector<std::string_view> const& lines, std::size_t fields) {
      if (lines.empty()) {
        throw SyntaxError("empty input", 1);
      }
      auto const toks = tokenize(lines[0]);
      if (toks.size() != fields) {
        throw SyntaxError(fmt::format("header needs {} integer(s)", fields), 1,
                          toks.size() > fields ? toks[fields].column : 1);
      }
      std::vector<long long> out;
      for (auto const& t : toks) {
        long long const v = parse_integer(t, 1);
        if (v < 1) {
          throw SyntaxError(fmt::format("order must be positive, got {}", v), 1, t.column);
        }
        out.push_back(v);
      }
      return out;
    }

  }  // namespace

  FiniteMonoid parse_monoid(std::string_view text, std::string default_label) {
    auto const        lines = split_lines(text);
    auto const        n     = static_cast<std::size_t>(read_header(lines, 1)[0]);
    if (n > 65'535) {
      throw SyntaxError(fmt::format("order {} is too large for a table file", n), 1, 1);
    }
    auto const rows = read_rows(lines, 1, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto const toks = tokenize(lines[1 + i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[i][j] < 0 || rows[i][j] >= static_cast<long long>(n)) {
          throw EntryOutOfRange(i, j, rows[i][j], i + 2, toks[j].column);
        }
      }
    }
    std::string label = std::move(default_label);
    for (std::size_t k = 1 + n; k < lines.size(); ++k) {
      std::string_view l   = lines[k];
      auto const       pos = l.find("# label:");
      if (pos != std::string_view::npos) {
        l                = l.substr(pos + 8);
        auto const begin = l.find_first_not_of(" \t");
        auto const end   = l.find_last_not_of(" \t\r");
        label = begin == std::string_view::npos ? "" : std::string(l.substr(begin, end - begin + 1));
      }
    }
    return validate_table(rows, std::move(label));
  }

  FiniteMonoid read_monoid_file(std::filesystem::path const& path) {
    return parse_monoid(read_text_file(path), path.stem().string());
  }

  std::string format_monoid(FiniteMonoid const& m) {
    std::string out = fmt::format("{}\n", m.order());
    for (index_t i = 0; i < m.order(); ++i) {
      out += fmt::format("{}\n", fmt::join(m.row(i), " "));
    }
    out += fmt::format("# label: {}\n", m.label());
    return out;
  }

  RawAction parse_action(std::string_view text) {
    auto const lines  = split_lines(text);
    auto const header = read_header(lines, 2);
    RawAction  out;
    out.left_order  = static_cast<std::size_t>(header[0]);
    out.right_order = static_cast<std::size_t>(header[1]);
    auto const rows = read_rows(lines, 1, out.right_order, out.left_order);
    for (std::size_t b = 0; b < rows.size(); ++b) {
      auto const           toks = tokenize(lines[1 + b]);
      std::vector<index_t> map;
      for (std::size_t a = 0; a < rows[b].size(); ++a) {
        if (rows[b][a] < 0 || rows[b][a] >= static_cast<long long>(out.left_order)) {
          throw EntryOutOfRange(b, a, rows[b][a], b + 2, toks[a].column);
        }
        map.push_back(static_cast<index_t>(rows[b][a]));
      }
      out.maps.push_back(std::move(map));
    }
    return out;
  }

  RawAction read_action_file(std::filesystem::path const& path) {
    return parse_action(read_text_file(path));
  }

  std::string format_action(EndoAction const& theta) {
    std::string out = fmt::format("{} {}\n", theta.left_order(), theta.right_order());
    for (auto const& map : theta.maps()) {
      out += fmt::format("{}\n", fmt::join(map, " "));
    }
    return out;
  }

  std::string format_decoding(DecodedCarrier const& decoding) {
    std::string out;
    for (std::size_t i = 0; i < decoding.size(); ++i) {
      out += fmt::format("{}\n", fmt::join(decoding[i], " "));
    }
    return out;
  }

  FiniteMonoid resolve_monoid(std::string const& arg) {
    std::filesystem::path const p(arg);
    if (arg.find('/') != std::string::npos || p.extension() == ".mon") {
      return read_monoid_file(p);
    }
    return named(arg);
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(fmt::format("cannot open '{}'", path.string()));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file_atomic(std::filesystem::path const& path, std::string_view content) {
    static std::atomic<unsigned> counter{0};
    auto tmp = path;
    tmp += fmt::format(".tmp{}", counter++);
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw Error(fmt::format("cannot write '{}'", tmp.string()));
      }
      out.write(content.data(), static_cast<std::streamsize>(content.size()));
      if (!out.flush()) {
        throw Error(fmt::format("write to '{}' failed", tmp.string()));
      }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw Error(fmt::format("cannot rename into '{}'", path.string()));
    }
  }

}  // namespace monoidlab
