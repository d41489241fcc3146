#include "hyperph/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "hyperph/bottleneck.hpp"
#include "hyperph/io.hpp"

namespace hyperph {

namespace {

CommandResult run_guarded(const std::function<std::string()>& body) {
  try {
    return {0, body(), ""};
  } catch (const ParseError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {1, "", std::string(e.what()) + "\n"};
  }
}

void check_options(const CommandOptions& opt) {
  if (opt.dim < 0) throw std::invalid_argument("--dim must be nonnegative");
  if (!(opt.p >= 1))
    throw std::invalid_argument("--p must be at least 1 (or inf)");
  if (!is_prime(opt.field))
    throw std::invalid_argument("--field must be a prime");
}

void list_complex(std::ostringstream& out, const std::string& name,
                  const Hypergraph& c) {
  out << name << " simplices " << c.edge_count() << "\n";
  int top = c.max_degree();
  for (int d = 0; d <= top; ++d) {
    std::vector<const Hyperedge*> level;
    for (const auto& e : c.edges())
      if (static_cast<int>(e.size()) == d + 1) level.push_back(&e);
    if (level.empty()) continue;
    out << "  dim " << d << " count " << level.size() << ":";
    for (const auto* e : level) out << " " << format_hyperedge(c, *e);
    out << "\n";
  }
}

void append_diagram(std::ostringstream& out, const PersistenceDiagram& d,
                    int dim) {
  for (const auto& pt : d.points)
    for (std::size_t k = 0; k < pt.multiplicity; ++k)
      out << dim << "," << format_real(pt.birth) << ","
          << format_real(pt.death) << "\n";
}

std::vector<std::string> select_arrows(const MorphismPersistence& mp,
                                       const std::vector<std::string>& wanted) {
  if (wanted.empty()) return surfaced_arrows();
  if (wanted.size() == 1 && wanted[0] == "all") {
    std::vector<std::string> names;
    for (const auto& a : mp.arrows) names.push_back(a.name);
    return names;
  }
  for (const auto& name : wanted) mp.arrow(name);  // throws on unknown names
  return wanted;
}

}  // namespace

CommandResult cmd_complex(const std::string& path) {
  return run_guarded([&] {
    FilteredHypergraph f = parse_hypergraph_file(path);
    std::ostringstream out;
    out << "vertices " << f.base().vertex_count() << "\n";
    out << "hyperedges " << f.base().edge_count() << "\n";
    list_complex(out, "delta", associated_complex(f.base()));
    list_complex(out, "lower", lower_associated_complex(f.base()));
    return out.str();
  });
}

CommandResult cmd_persist(const std::string& path, const CommandOptions& opt) {
  return run_guarded([&] {
    check_options(opt);
    FilteredHypergraph f = parse_hypergraph_file(path);
    PersistenceDiagram d = variant_diagram(f, opt.variant, opt.dim, opt.field);
    std::ostringstream out;
    out << "dim,birth,death\n";
    append_diagram(out, d, opt.dim);
    return out.str();
  });
}

CommandResult cmd_distance(const std::string& path_a,
                           const std::string& path_b,
                           const CommandOptions& opt) {
  return run_guarded([&] {
    check_options(opt);
    FilteredHypergraph f = parse_hypergraph_file(path_a);
    FilteredHypergraph g = parse_hypergraph_file(path_b);
    double d = hypergraph_distance(f, g, opt.dim, opt.p, opt.field);
    return format_real(d) + "\n";
  });
}

CommandResult cmd_morphism(const std::string& domain_path,
                           const std::string& codomain_path,
                           const std::string& map_path,
                           const CommandOptions& opt) {
  return run_guarded([&] {
    check_options(opt);
    FilteredHypergraph dom = parse_hypergraph_file(domain_path);
    FilteredHypergraph cod = parse_hypergraph_file(codomain_path);
    std::vector<int> vmap =
        parse_vertex_map_file(map_path, dom.base(), cod.base());
    HypergraphMorphism m(dom.base(), cod.base(), vmap);
    const FilteredHypergraph& carrier =
        opt.direction == Direction::pushforward ? dom : cod;
    MorphismPersistence mp = build_morphism_persistence(
        m, carrier, opt.direction, opt.dim, opt.field);
    std::ostringstream out;
    out << "arrow,part,dim,birth,death\n";
    for (const auto& name : select_arrows(mp, opt.arrows)) {
      DiagramTriple t = map_diagram_triple(mp.arrow(name));
      const std::pair<const char*, const PersistenceDiagram*> parts[] = {
          {"ker", &t.ker}, {"im", &t.im}, {"coker", &t.coker}};
      for (const auto& [part, diagram] : parts)
        for (const auto& pt : diagram->points)
          for (std::size_t k = 0; k < pt.multiplicity; ++k)
            out << name << "," << part << "," << opt.dim << ","
                << format_real(pt.birth) << "," << format_real(pt.death)
                << "\n";
    }
    return out.str();
  });
}

CommandResult cmd_evolve(const std::string& dir, const CommandOptions& opt) {
  return run_guarded([&] {
    check_options(opt);
    std::vector<Snapshot> log = load_evolution_log(dir);
    if (log.empty())
      throw std::invalid_argument("evolution log has no .hg snapshots");
    std::ostringstream out;
    for (const auto& snap : log) {
      out << "# snapshot " << snap.label << "\n";
      out << "dim,birth,death\n";
      append_diagram(
          out,
          variant_diagram(snap.filtration, Variant::embedded, opt.dim,
                          opt.field),
          opt.dim);
      out << "\n";
    }
    for (std::size_t i = 0; i + 1 < log.size(); ++i) {
      const FilteredHypergraph& before = log[i].filtration;
      const FilteredHypergraph& after = log[i + 1].filtration;
      // The step morphism sends each vertex to its namesake; validation
      // rejects logs where a snapshot is not contained in its successor.
      std::vector<int> vmap;
      for (const auto& label : before.base().vertices()) {
        int to = after.base().vertex_index(label);
        if (to < 0)
          throw std::invalid_argument("snapshot " + log[i].label +
                                      ": vertex '" + label +
                                      "' disappears in " + log[i + 1].label);
        vmap.push_back(to);
      }
      HypergraphMorphism step(before.base(), after.base(), vmap);
      MorphismPersistence push = build_morphism_persistence(
          step, before, Direction::pushforward, opt.dim, opt.field);
      MorphismPersistence pull = build_morphism_persistence(
          step, after, Direction::pullback, opt.dim, opt.field);
      out << "# pair " << log[i].label << " " << log[i + 1].label << "\n";
      out << "arrow,distance\n";
      for (const auto& name : surfaced_arrows()) {
        double d = map_distance_p(map_diagram_triple(pull.arrow(name)),
                                  map_diagram_triple(push.arrow(name)), opt.p);
        out << name << "," << format_real(d) << "\n";
      }
      out << "\n";
    }
    return out.str();
  });
}

}  // namespace hyperph
