#include "congkit/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>

#include "congkit/errors.hpp"

namespace congkit {

  namespace {
    std::string difference(std::string const& x, std::string const& y) {
      return x + "−" + y;
    }

    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }

    std::vector<std::string> edge_strings(Lattice const& lattice) {
      std::vector<std::string> out;
      for (auto [a, b] : lattice.edges) {
        out.push_back("[" + std::to_string(a) + "] < [" + std::to_string(b)
                      + "]");
      }
      return out;
    }
  }  // namespace

  std::vector<std::string> congruence_names(CayleyTable const&            s,
                                            std::vector<Partition> const& cs) {
    FamilySpec spec = family::Custom{};
    try {
      spec = parse_family(s.label());
    } catch (Error const&) {
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      auto const& c = cs[k];
      if (c.is_identity()) {
        names.push_back("ι");
        continue;
      }
      if (c.is_universal()) {
        names.push_back("ω");
        continue;
      }
      std::string name = "α_" + std::to_string(k);
      if (auto const* band = std::get_if<family::RectangularBand>(&spec)) {
        std::size_t const        r = band->r;
        std::vector<std::size_t> rows(s.size()), cols(s.size());
        for (std::size_t x = 0; x < s.size(); ++x) {
          rows[x] = x / r;
          cols[x] = x % r;
        }
        if (c == Partition(rows)) {
          name = "α_L";
        } else if (c == Partition(cols)) {
          name = "α_R";
        }
      } else if (std::holds_alternative<family::CyclicGroup>(spec)) {
        std::size_t d = 0;
        for (std::size_t x = 0; x < s.size(); ++x) {
          d += c.same_class(0, x);
        }
        name = "α_{C" + std::to_string(d) + "}";
      }
      names.push_back(name);
    }
    return names;
  }

  std::vector<std::string> ideal_labels(PhiContext const& ctx) {
    auto const& a     = ctx.algebra;
    auto const& s     = a.semigroup();
    auto const  cname = congruence_names(s, ctx.congruences);
    std::size_t const count = ctx.ideals.size();
    std::vector<std::string> labels(count);

    auto first_free = [&](std::size_t i, std::string const& label) {
      if (labels[i].empty()) {
        labels[i] = label;
      }
    };
    auto try_label = [&](Ideal const& ideal, std::string const& label) {
      auto it = std::lower_bound(ctx.ideals.begin(), ctx.ideals.end(), ideal);
      if (it != ctx.ideals.end() && *it == ideal) {
        first_free(it - ctx.ideals.begin(), label);
      }
    };

    try_label(zero_ideal(a), "{0}");
    try_label(full_ideal(a), "F[S]");
    for (std::size_t x = 0; x < s.size(); ++x) {
      try_label(ideal_closure(a, {a.element(x)}), "J_" + s.name(x));
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = x + 1; y < s.size(); ++y) {
        auto j = ideal_closure(a, {a.element(x) - a.element(y)});
        if (j.dimension() == 1) {
          try_label(j, "J_{" + difference(s.name(x), s.name(y)) + "}");
        }
      }
    }
    // F[α] for every congruence, remembered for the intersection rule.
    std::vector<std::pair<Ideal, std::string>> images;
    for (std::size_t k = 0; k < ctx.congruences.size(); ++k) {
      if (ctx.congruences[k].is_identity()) {
        continue;
      }
      std::string label = "F[" + cname[k] + "]";
      if (cname[k] == "α_L") {
        label = "J_L";
      } else if (cname[k] == "α_R") {
        label = "J_R";
      }
      auto image = f_of_alpha(a, ctx.congruences[k]);
      try_label(image, label);
      if (!ctx.congruences[k].is_universal()) {
        images.emplace_back(image, label);
      }
    }
    for (std::size_t u = 0; u < images.size(); ++u) {
      for (std::size_t v = u + 1; v < images.size(); ++v) {
        try_label(ideal_intersection(images[u].first, images[v].first),
                  images[u].second + "∩" + images[v].second);
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::string span;
      for (auto const& v : ctx.ideals[i].space().basis()) {
        span += (span.empty() ? "" : ", ") + a.format(v);
      }
      first_free(i, "Span(" + span + ")");
    }
    return labels;
  }

  Lattice ideal_lattice(PhiContext const& ctx) {
    Lattice out;
    out.name   = "ideals";
    auto names = ideal_labels(ctx);
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
      out.nodes.push_back({names[i], ctx.ideals[i].dimension()});
    }
    out.edges = ideal_lattice(ctx.ideals);
    return out;
  }

  Lattice congruence_lattice(CayleyTable const& s, std::vector<Partition> const& cs) {
    Lattice out;
    out.name   = "congruences";
    auto names = congruence_names(s, cs);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      out.nodes.push_back({names[k] + " = " + to_string(cs[k], s.names()),
                           s.size() - cs[k].number_of_classes()});
    }
    out.edges = cover_relation(cs.size(), [&](std::size_t a, std::size_t b) {
      return refines(cs[a], cs[b]);
    });
    return out;
  }

  std::string render_ascii(Lattice const& lattice) {
    std::map<std::size_t, std::vector<std::size_t>, std::greater<>> levels;
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
      levels[lattice.nodes[i].level].push_back(i);
    }
    std::ostringstream out;
    for (auto const& [level, members] : levels) {
      out << "level " << level << ":";
      for (auto i : members) {
        out << "  [" << i << "] " << lattice.nodes[i].label;
      }
      out << '\n';
    }
    out << "covers:\n";
    for (auto const& e : edge_strings(lattice)) {
      out << "  " << e << '\n';
    }
    return out.str();
  }

  std::string render_dot(Lattice const& lattice) {
    std::map<std::size_t, std::vector<std::size_t>> levels;
    std::ostringstream out;
    out << "digraph " << lattice.name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
      out << "  n" << i << " [label=\"" << dot_escape(lattice.nodes[i].label)
          << "\"];\n";
      levels[lattice.nodes[i].level].push_back(i);
    }
    for (auto const& [level, members] : levels) {
      out << "  { rank=same;";
      for (auto i : members) {
        out << " n" << i << ";";
      }
      out << " }\n";
    }
    for (auto [a, b] : lattice.edges) {
      out << "  n" << a << " -> n" << b << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  nlohmann::json semigroup_json(CayleyTable const&            s,
                                std::vector<Partition> const& congruences,
                                CheckReport const&            permutable) {
    auto           names = congruence_names(s, congruences);
    nlohmann::json cs    = nlohmann::json::array();
    for (std::size_t k = 0; k < congruences.size(); ++k) {
      cs.push_back({{"index", k},
                    {"name", names[k]},
                    {"classes", to_string(congruences[k], s.names())},
                    {"labels", congruences[k].labels()}});
    }
    auto lattice = congruence_lattice(s, congruences);
    return {{"semigroup", s.label()},
            {"elements", s.names()},
            {"table", s.rows()},
            {"congruences", cs},
            {"lattice", lattice.edges},
            {"permutable", permutable}};
  }

  nlohmann::json algebra_json(PhiContext const&               ctx,
                              std::vector<CheckReport> const& checks) {
    auto const&    s      = ctx.algebra.semigroup();
    auto const     labels = ideal_labels(ctx);
    auto const     cnames = congruence_names(s, ctx.congruences);
    nlohmann::json ideals = nlohmann::json::array();
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
      auto j     = ideal_to_json(ctx, i);
      j["label"] = labels[i];
      j["rho"]   = cnames[ctx.phi[i]];
      ideals.push_back(std::move(j));
    }
    nlohmann::json cs = nlohmann::json::array();
    for (std::size_t k = 0; k < ctx.congruences.size(); ++k) {
      cs.push_back({{"index", k},
                    {"name", cnames[k]},
                    {"classes", to_string(ctx.congruences[k], s.names())}});
    }
    return {{"semigroup", s.label()},
            {"prime", ctx.algebra.field().characteristic()},
            {"ideals", ideals},
            {"lattice", ideal_lattice(ctx.ideals)},
            {"congruences", cs},
            {"kernel_classes", kernel_classes(ctx)},
            {"checks", checks}};
  }

}  // namespace congkit
