#include "congkit/semigroup.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "congkit/errors.hpp"
#include "congkit/relations.hpp"

namespace congkit {

  namespace {

    void check_size(std::size_t n, std::size_t max_size) {
      if (n < 1 || n > max_size) {
        throw Error(ErrorKind::invalid_size,
                    "semigroup size " + std::to_string(n)
                        + " outside [1, " + std::to_string(max_size) + "]");
      }
    }

    std::string superscript(std::size_t k) {
      static char const* const digits[]
          = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
      std::string out;
      for (char c : std::to_string(k)) {
        out += digits[c - '0'];
      }
      return out;
    }

    // e, f, g, ... as in the usual naming of idempotents.
    std::vector<std::string> letter_names(std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        if (i < 22) {
          names.emplace_back(1, static_cast<char>('e' + i));
        } else {
          names.push_back("e" + std::to_string(i));
        }
      }
      return names;
    }

    template <typename F>
    table_rows make_rows(std::size_t n, F&& product) {
      table_rows rows(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          rows[i][j] = product(i, j);
        }
      }
      return rows;
    }

    std::size_t parse_number(std::string_view text, std::string_view what) {
      std::size_t value = 0;
      auto const* last  = text.data() + text.size();
      auto [ptr, ec]    = std::from_chars(text.data(), last, value);
      if (ec != std::errc() || ptr != last || text.empty()) {
        throw Error(ErrorKind::parse_error,
                    "expected a non-negative integer for " + std::string(what)
                        + ", got '" + std::string(text) + "'");
      }
      return value;
    }

    std::vector<std::string> split_tokens(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> tokens;
      std::string              tok;
      while (in >> tok) {
        tokens.push_back(tok);
      }
      return tokens;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CayleyTable
  ////////////////////////////////////////////////////////////////////////

  CayleyTable::CayleyTable(table_rows const&        rows,
                           std::vector<std::string> names,
                           std::string              label,
                           std::size_t              max_size)
      : _n(rows.size()),
        _table(),
        _names(std::move(names)),
        _label(std::move(label)) {
    check_size(_n, max_size);
    if (_names.size() != _n) {
      throw Error(ErrorKind::invalid_input,
                  "expected " + std::to_string(_n) + " names, got "
                      + std::to_string(_names.size()));
    }
    if (std::set<std::string>(_names.begin(), _names.end()).size() != _n) {
      throw Error(ErrorKind::invalid_input, "element names are not distinct");
    }
    _table.reserve(_n * _n);
    for (std::size_t i = 0; i < _n; ++i) {
      if (rows[i].size() != _n) {
        throw Error(ErrorKind::invalid_input,
                    "row " + std::to_string(i) + " has "
                        + std::to_string(rows[i].size()) + " entries, expected "
                        + std::to_string(_n));
      }
      for (std::size_t j = 0; j < _n; ++j) {
        if (rows[i][j] >= _n) {
          throw Error(ErrorKind::invalid_input,
                      "entry (" + std::to_string(i) + ", " + std::to_string(j)
                          + ") = " + std::to_string(rows[i][j])
                          + " is out of range");
        }
        _table.push_back(rows[i][j]);
      }
    }
    validate_associativity(rows);
  }

  table_rows CayleyTable::rows() const {
    return make_rows(_n, [this](auto i, auto j) { return product(i, j); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  CayleyTable build(FamilySpec const& spec, std::size_t max_size) {
    auto const label = to_string(spec);
    return std::visit(
        [&](auto const& f) -> CayleyTable {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, family::SemilatticeChain>) {
            check_size(f.n, max_size);
            return CayleyTable(
                make_rows(f.n, [](auto i, auto j) { return std::min(i, j); }),
                letter_names(f.n),
                label,
                max_size);
          } else if constexpr (std::is_same_v<T, family::RectangularBand>) {
            if (f.l < 1 || f.r < 1) {
              throw Error(ErrorKind::invalid_size,
                          "rectangular band sides must be positive");
            }
            check_size(f.l * f.r, max_size);
            std::vector<std::string> names;
            for (std::size_t a = 1; a <= f.l; ++a) {
              for (std::size_t b = 1; b <= f.r; ++b) {
                names.push_back("(a_" + std::to_string(a) + ",b_"
                                + std::to_string(b) + ")");
              }
            }
            auto const r = f.r;
            return CayleyTable(
                make_rows(f.l * f.r,
                          [r](auto x, auto y) { return (x / r) * r + y % r; }),
                std::move(names),
                label,
                max_size);
          } else if constexpr (std::is_same_v<T, family::CyclicGroup>) {
            check_size(f.n, max_size);
            std::vector<std::string> names{"1"};
            for (std::size_t k = 1; k < f.n; ++k) {
              names.push_back(k == 1 ? "a" : "a" + superscript(k));
            }
            auto const n = f.n;
            return CayleyTable(
                make_rows(n, [n](auto i, auto j) { return (i + j) % n; }),
                std::move(names),
                label,
                max_size);
          } else if constexpr (std::is_same_v<T, family::LeftZero>) {
            check_size(f.n, max_size);
            return CayleyTable(make_rows(f.n, [](auto i, auto) { return i; }),
                               letter_names(f.n),
                               label,
                               max_size);
          } else if constexpr (std::is_same_v<T, family::RightZero>) {
            check_size(f.n, max_size);
            return CayleyTable(make_rows(f.n, [](auto, auto j) { return j; }),
                               letter_names(f.n),
                               label,
                               max_size);
          } else if constexpr (std::is_same_v<T,
                                              family::TwoElementSemilattice>) {
            return CayleyTable({{0, 0}, {0, 1}}, {"e", "f"}, label, max_size);
          } else {
            return CayleyTable(f.table, f.names, label, max_size);
          }
        },
        spec);
  }

  FamilySpec parse_family(std::string_view text) {
    auto const  colon = text.find(':');
    auto const  kind  = text.substr(0, colon);
    auto const  args  = colon == std::string_view::npos
                            ? std::string_view{}
                            : text.substr(colon + 1);
    std::vector<std::size_t> numbers;
    std::size_t              pos = 0;
    while (!args.empty() && pos <= args.size()) {
      auto comma = args.find(',', pos);
      if (comma == std::string_view::npos) {
        comma = args.size();
      }
      numbers.push_back(
          parse_number(args.substr(pos, comma - pos), "family argument"));
      pos = comma + 1;
    }
    auto expect = [&](std::size_t count) {
      if (numbers.size() != count) {
        throw Error(ErrorKind::parse_error,
                    "family '" + std::string(kind) + "' takes "
                        + std::to_string(count) + " argument(s)");
      }
    };
    if (kind == "chain-semilattice") {
      expect(1);
      return family::SemilatticeChain{numbers[0]};
    } else if (kind == "rect-band") {
      expect(2);
      return family::RectangularBand{numbers[0], numbers[1]};
    } else if (kind == "cyclic") {
      expect(1);
      return family::CyclicGroup{numbers[0]};
    } else if (kind == "left-zero") {
      expect(1);
      return family::LeftZero{numbers[0]};
    } else if (kind == "right-zero") {
      expect(1);
      return family::RightZero{numbers[0]};
    } else if (kind == "semilattice2") {
      expect(0);
      return family::TwoElementSemilattice{};
    }
    throw Error(ErrorKind::parse_error,
                "unknown family '" + std::string(text) + "'");
  }

  std::string to_string(FamilySpec const& spec) {
    return std::visit(
        [](auto const& f) -> std::string {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, family::SemilatticeChain>) {
            return "chain-semilattice:" + std::to_string(f.n);
          } else if constexpr (std::is_same_v<T, family::RectangularBand>) {
            return "rect-band:" + std::to_string(f.l) + ","
                   + std::to_string(f.r);
          } else if constexpr (std::is_same_v<T, family::CyclicGroup>) {
            return "cyclic:" + std::to_string(f.n);
          } else if constexpr (std::is_same_v<T, family::LeftZero>) {
            return "left-zero:" + std::to_string(f.n);
          } else if constexpr (std::is_same_v<T, family::RightZero>) {
            return "right-zero:" + std::to_string(f.n);
          } else if constexpr (std::is_same_v<T,
                                              family::TwoElementSemilattice>) {
            return "semilattice2";
          } else {
            return "custom";
          }
        },
        spec);
  }

  ////////////////////////////////////////////////////////////////////////
  // Associativity
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::array<std::size_t, 3>>
  find_associativity_violation(table_rows const& rows) {
    std::size_t const n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (rows[rows[i][j]][k] != rows[i][rows[j][k]]) {
            return std::array<std::size_t, 3>{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  void validate_associativity(table_rows const& rows) {
    if (auto v = find_associativity_violation(rows)) {
      throw NotAssociative((*v)[0], (*v)[1], (*v)[2]);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotient
  ////////////////////////////////////////////////////////////////////////

  CayleyTable quotient(CayleyTable const& s, Partition const& alpha) {
    if (alpha.size() != s.size()) {
      throw Error(ErrorKind::carrier_mismatch,
                  "partition size does not match semigroup size");
    }
    if (auto w = congruence_violation(s, alpha)) {
      throw Error(ErrorKind::not_a_congruence,
                  to_string(alpha, s.names()) + " fails at ("
                      + s.name(w->x) + ", " + s.name(w->y) + ") times "
                      + s.name(w->z) + " on the " + to_string(w->side));
    }
    auto const               classes = alpha.classes();
    std::vector<std::string> names;
    for (auto const& cls : classes) {
      std::string name = "{";
      for (std::size_t k = 0; k < cls.size(); ++k) {
        name += (k == 0 ? "" : ",") + s.name(cls[k]);
      }
      names.push_back(name + "}");
    }
    auto rows = make_rows(classes.size(), [&](auto a, auto b) {
      return alpha.class_of(s.product(classes[a][0], classes[b][0]));
    });
    return CayleyTable(rows,
                       std::move(names),
                       s.label() + "/~",
                       std::max(s.size(), CayleyTable::default_max_size));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  CayleyTable read_cayley_table(std::istream& in, std::size_t max_size) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string                                      line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        lines.emplace_back(number, line);
      }
    }
    if (lines.empty()) {
      throw Error(ErrorKind::parse_error, "empty Cayley table");
    }
    auto const header = split_tokens(lines[0].second);
    if (header.size() != 1) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(lines[0].first)
                      + ": expected the element count");
    }
    std::size_t const n = parse_number(header[0], "element count");
    check_size(n, max_size);
    if (lines.size() != n + 2) {
      throw Error(ErrorKind::parse_error,
                  "expected " + std::to_string(n + 2)
                      + " non-comment lines, got "
                      + std::to_string(lines.size()));
    }
    auto names = split_tokens(lines[1].second);
    if (names.size() != n) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(lines[1].first) + ": expected "
                      + std::to_string(n) + " names");
    }
    table_rows rows;
    for (std::size_t i = 0; i < n; ++i) {
      auto const& [number, text] = lines[i + 2];
      auto const tokens          = split_tokens(text);
      if (tokens.size() != n) {
        throw Error(ErrorKind::parse_error,
                    "line " + std::to_string(number) + ": expected "
                        + std::to_string(n) + " entries");
      }
      std::vector<std::size_t> row;
      for (auto const& tok : tokens) {
        row.push_back(parse_number(tok, "table entry"));
      }
      rows.push_back(std::move(row));
    }
    return CayleyTable(rows, std::move(names), "custom", max_size);
  }

  CayleyTable read_cayley_table_file(std::string const& path,
                                     std::size_t        max_size) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::invalid_input, "cannot open '" + path + "'");
    }
    auto s = read_cayley_table(in, max_size);
    return CayleyTable(s.rows(), s.names(), path, max_size);
  }

  void write_cayley_table(std::ostream& out, CayleyTable const& s) {
    out << "# " << s.label() << "\n" << s.size() << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out << (i == 0 ? "" : " ") << s.name(i);
    }
    out << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        out << (j == 0 ? "" : " ") << s.product(i, j);
      }
      out << "\n";
    }
  }

}  // namespace congkit
