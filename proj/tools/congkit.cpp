#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "congkit/errors.hpp"
#include "congkit/render.hpp"
#include "congkit/suite.hpp"

using namespace congkit;

namespace {

  enum Exit { ok = 0, check_failed = 1, bad_input = 2, guard_exceeded = 3 };

  struct RunConfig {
    std::string                family;
    std::string                table;
    std::uint32_t              prime = 0;
    std::vector<std::uint32_t> primes{2, 3, 5};
    std::string                format = "ascii";
    std::string                out;
    std::size_t                max_size = 12;
    std::size_t                max_partition = default_partition_guard;
    std::optional<std::uint64_t> max_vectors;
    std::optional<std::uint64_t> max_subspaces;
    std::uint64_t              max_carrier = default_carrier_guard;
    std::string                goldens;
    bool                       dump_goldens = false;
  };

  Guards guards_of(RunConfig const& c) {
    Guards g;
    g.max_partition_size = c.max_partition;
    g.subspaces          = SubspaceGuard::from_environment();
    if (c.max_vectors) {
      g.subspaces.max_vectors = *c.max_vectors;
    }
    if (c.max_subspaces) {
      g.subspaces.max_subspaces = *c.max_subspaces;
    }
    g.max_carrier = c.max_carrier;
    return g;
  }

  CayleyTable load(RunConfig const& c) {
    if (!c.table.empty()) {
      return read_cayley_table_file(c.table, c.max_size);
    }
    if (c.family.empty()) {
      throw Error(ErrorKind::invalid_input, "one of --family or --table is required");
    }
    return build(parse_family(c.family), c.max_size);
  }

  void emit(RunConfig const& c, std::string const& text) {
    if (c.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(c.out);
    if (!(file << text)) {
      throw Error(ErrorKind::invalid_input, "cannot write " + c.out);
    }
  }

  // One line per witness field; ideals print as their span.
  std::string describe(nlohmann::json const& witness) {
    std::string out;
    for (auto const& [key, value] : witness.items()) {
      std::string text;
      if (value.is_string()) {
        text = value.get<std::string>();
      } else if (value.is_object() && value.contains("span")) {
        std::string span;
        for (auto const& term : value["span"]) {
          span += (span.empty() ? "" : ", ") + term.get<std::string>();
        }
        text = "Span(" + span + ") [" + value["index"].dump() + "]";
      } else {
        text = value.dump();
      }
      out += "      " + key + ": " + text + "\n";
    }
    return out;
  }

  std::string describe(CheckReport const& r) {
    std::string out = "  " + r.check + ": " + (r.verdict ? "PASS" : "FAIL") + "  "
                      + r.summary + "\n";
    for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
      out += "    witness " + std::to_string(k + 1) + ":\n" + describe(r.witnesses[k]);
    }
    return out;
  }

  std::size_t display_width(std::string const& text) {
    std::size_t n = 0;
    for (unsigned char ch : text) {
      n += (ch & 0xC0) != 0x80;
    }
    return n;
  }

  std::string table_text(CayleyTable const& s) {
    std::size_t width = 1;
    for (auto const& n : s.names()) {
      width = std::max(width, display_width(n));
    }
    auto pad = [&](std::string const& x) {
      return x + std::string(width - std::min(width, display_width(x)) + 1, ' ');
    };
    std::string out = "  " + pad("·") + "|";
    for (std::size_t j = 0; j < s.size(); ++j) {
      out += " " + pad(s.name(j));
    }
    out += "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += "  " + pad(s.name(i)) + "|";
      for (std::size_t j = 0; j < s.size(); ++j) {
        out += " " + pad(s.name(s.product(i, j)));
      }
      out += "\n";
    }
    return out;
  }

  int cmd_semigroup(RunConfig const& c) {
    auto const s           = load(c);
    auto const congruences = enumerate_congruences(s, c.max_partition);
    auto const permutable  = is_permutable(s, c.max_partition);
    if (c.format == "json") {
      emit(c, semigroup_json(s, congruences, permutable).dump(2) + "\n");
    } else if (c.format == "dot") {
      emit(c, render_dot(congruence_lattice(s, congruences)));
    } else {
      std::ostringstream out;
      out << "semigroup: " << s.label() << " (" << s.size() << " elements)\n"
          << table_text(s) << "congruences: " << congruences.size() << "\n"
          << render_ascii(congruence_lattice(s, congruences))
          << "permutable: " << (permutable.verdict ? "true" : "false") << "\n";
      for (auto const& w : permutable.witnesses) {
        out << "  witness:\n" << describe(w);
      }
      emit(c, out.str());
    }
    return ok;
  }

  int cmd_algebra(RunConfig const& c) {
    auto ctx    = build_phi_context(SemigroupAlgebra(load(c), PrimeField(c.prime)),
                                    guards_of(c));
    std::vector<CheckReport> checks{check_meet_homomorphism(ctx),
                                    check_join_compatible_kernel(ctx),
                                    check_circ_homomorphism(ctx)};
    if (c.format == "json") {
      emit(c, algebra_json(ctx, checks).dump(2) + "\n");
      return ok;
    }
    if (c.format == "dot") {
      emit(c, render_dot(ideal_lattice(ctx)));
      return ok;
    }
    auto const         labels = ideal_labels(ctx);
    auto const         names  = congruence_names(ctx.algebra.semigroup(), ctx.congruences);
    std::ostringstream out;
    out << "algebra: " << ctx.label() << ", dimension " << ctx.algebra.dimension() << "\n"
        << "ideals: " << ctx.ideals.size() << "\n";
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
      out << "  [" << i << "] dim " << ctx.ideals[i].dimension() << "  " << labels[i]
          << "  rho = " << names[ctx.phi[i]] << "\n";
    }
    out << "congruences: " << ctx.congruences.size() << "\n";
    for (std::size_t k = 0; k < ctx.congruences.size(); ++k) {
      out << "  " << names[k] << " = "
          << to_string(ctx.congruences[k], ctx.algebra.semigroup().names()) << "\n";
    }
    out << "Hasse diagram:\n" << render_ascii(ideal_lattice(ctx)) << "ker phi classes:";
    for (auto const& cls : kernel_classes(ctx)) {
      out << " {";
      for (std::size_t k = 0; k < cls.size(); ++k) {
        out << (k ? ", " : "") << labels[cls[k]];
      }
      out << "}";
    }
    out << "\nchecks:\n";
    for (auto const& r : checks) {
      out << describe(r);
    }
    emit(c, out.str());
    return ok;
  }

  int cmd_verify_paper(RunConfig const& c) {
    SuiteConfig config;
    config.primes = c.primes;
    config.guards = guards_of(c);
    if (!c.goldens.empty()) {
      std::ifstream in(c.goldens);
      if (!in) {
        throw Error(ErrorKind::invalid_input, "cannot open " + c.goldens);
      }
      try {
        config.goldens = patched_goldens(nlohmann::json::parse(in));
      } catch (nlohmann::json::exception const& e) {
        throw Error(ErrorKind::parse_error, c.goldens + ": " + e.what());
      }
    }
    if (c.dump_goldens) {
      emit(c, nlohmann::json(config.goldens).dump(2) + "\n");
      return ok;
    }
    if (!c.table.empty()) {
      config.extra = read_cayley_table_file(c.table, c.max_size);
    }
    auto const rows = run_suite(config);
    bool       all  = true;
    std::string text;
    nlohmann::json doc = nlohmann::json::array();
    for (auto const& row : rows) {
      all = all && row.pass;
      text += format_row(row);
      doc.push_back({{"row", row.id},
                     {"title", row.title},
                     {"pass", row.pass},
                     {"notes", row.notes},
                     {"ms", row.ms}});
    }
    emit(c, c.format == "json" ? doc.dump(2) + "\n" : text);
    return all ? ok : check_failed;
  }

  std::vector<std::uint32_t> split_primes(std::string const& text) {
    std::vector<std::uint32_t> out;
    std::stringstream          in(text);
    std::string                item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      unsigned long p = 0;
      try {
        p = std::stoul(item, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) {
        throw Error(ErrorKind::invalid_input, "bad prime list: " + text);
      }
      PrimeField check(static_cast<std::uint32_t>(p));
      out.push_back(check.characteristic());
    }
    if (out.empty()) {
      throw Error(ErrorKind::invalid_input, "empty prime list");
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App  app{"Congruences of finite semigroups and ideals of their semigroup algebras"};
  RunConfig c;
  std::string primes = "2,3,5";
  app.require_subcommand(1);

  auto add_source = [&](CLI::App* sub) {
    auto* family = sub->add_option("--family", c.family,
                                   "chain-semilattice:N, rect-band:L,R, cyclic:N, "
                                   "left-zero:N, right-zero:N or semilattice2");
    auto* table = sub->add_option("--table", c.table, "Cayley table file");
    family->excludes(table);
    sub->add_option("--max-size", c.max_size, "largest accepted semigroup")
        ->capture_default_str();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"ascii", "dot", "json"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write output here instead of stdout");
    sub->add_option("--max-partition", c.max_partition,
                    "largest semigroup whose partitions are enumerated")
        ->capture_default_str();
    sub->add_option("--max-vectors", c.max_vectors, "subspace guard: largest p^dim");
    sub->add_option("--max-subspaces", c.max_subspaces,
                    "subspace guard: largest number of subspaces");
    sub->add_option("--max-carrier", c.max_carrier,
                    "largest p^dim for materialized algebra congruences")
        ->capture_default_str();
  };

  auto* semigroup = app.add_subcommand("semigroup", "Cayley table, congruences, permutability");
  add_source(semigroup);
  add_common(semigroup);

  auto* algebra = app.add_subcommand("algebra", "ideals of F_p[S] and the checks on phi");
  add_source(algebra);
  add_common(algebra);
  algebra->add_option("--prime", c.prime, "characteristic p")->required();

  auto* verify = app.add_subcommand("verify-paper", "run every reproduction row");
  verify->add_option("--primes", primes, "comma-separated primes")->capture_default_str();
  verify->add_option("--table", c.table, "extra Cayley table for the property row");
  verify->add_option("--max-size", c.max_size, "largest accepted semigroup")
      ->capture_default_str();
  verify->add_option("--goldens", c.goldens, "JSON merge patch over the golden constants");
  verify->add_flag("--dump-goldens", c.dump_goldens, "print the golden constants and exit");
  add_common(verify);
  verify->get_option("--format")->check(CLI::IsMember({"ascii", "json"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (semigroup->parsed()) {
      return cmd_semigroup(c);
    }
    if (algebra->parsed()) {
      return cmd_algebra(c);
    }
    c.primes = split_primes(primes);
    return cmd_verify_paper(c);
  } catch (GuardExceeded const& e) {
    std::cerr << "congkit: " << e.what() << "\n";
    return guard_exceeded;
  } catch (Error const& e) {
    std::cerr << "congkit: " << e.what() << "\n";
    return bad_input;
  } catch (std::exception const& e) {
    std::cerr << "congkit: " << e.what() << "\n";
    return bad_input;
  }
}
