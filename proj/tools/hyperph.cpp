#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperph/commands.hpp"

namespace {

bool parse_p(const std::string& text, double& out) {
  if (text == "inf") {
    out = std::numeric_limits<double>::infinity();
    return true;
  }
  const char* begin = text.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end != begin && *end == '\0';
}

hyperph::Variant parse_variant(const std::string& text) {
  if (text == "delta") return hyperph::Variant::delta_upper;
  if (text == "lower") return hyperph::Variant::delta_lower;
  return hyperph::Variant::embedded;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistent homology of weighted hypergraphs"};
  app.require_subcommand(1);

  std::string file_a, file_b, map_file, dir;
  std::string p_text = "inf";
  std::string variant_text = "embedded";
  std::string direction_text = "pushforward";
  hyperph::CommandOptions opt;

  auto* complex_cmd =
      app.add_subcommand("complex", "list the associated and lower-associated "
                                    "simplicial complexes of a hypergraph");
  complex_cmd->add_option("file", file_a, "hypergraph file")->required();

  auto add_dim_field = [&](CLI::App* cmd) {
    cmd->add_option("--dim", opt.dim, "homology degree (default 1)");
    cmd->add_option("--field", opt.field,
                    "prime coefficient field (default 2)");
  };
  auto add_p = [&](CLI::App* cmd) {
    cmd->add_option("--p", p_text, "matching exponent, a real >= 1 or 'inf'");
  };

  auto* persist_cmd = app.add_subcommand(
      "persist", "persistence diagram of one filtration variant");
  persist_cmd->add_option("file", file_a, "weighted hypergraph file")
      ->required();
  persist_cmd
      ->add_option("--variant", variant_text,
                   "embedded | delta | lower (default embedded)")
      ->check(CLI::IsMember({"embedded", "delta", "lower"}));
  add_dim_field(persist_cmd);

  auto* distance_cmd = app.add_subcommand(
      "distance", "distance between two filtrations of one hypergraph");
  distance_cmd->add_option("file_a", file_a, "first weighted hypergraph")
      ->required();
  distance_cmd->add_option("file_b", file_b, "second weighted hypergraph")
      ->required();
  add_dim_field(distance_cmd);
  add_p(distance_cmd);

  auto* morphism_cmd = app.add_subcommand(
      "morphism",
      "kernel / image / cokernel diagrams of the maps induced by a morphism");
  morphism_cmd->add_option("domain", file_a, "domain hypergraph file")
      ->required();
  morphism_cmd->add_option("codomain", file_b, "codomain hypergraph file")
      ->required();
  morphism_cmd->add_option("map", map_file, "vertex map file")->required();
  morphism_cmd
      ->add_option("--direction", direction_text,
                   "pushforward | pullback (default pushforward)")
      ->check(CLI::IsMember({"pushforward", "pullback"}));
  morphism_cmd
      ->add_option("--arrows", opt.arrows,
                   "comma-separated arrow names, or 'all'")
      ->delimiter(',');
  add_dim_field(morphism_cmd);

  auto* evolve_cmd = app.add_subcommand(
      "evolve", "diagrams and arrow distances over a snapshot directory");
  evolve_cmd->add_option("dir", dir, "directory of <timestamp>.hg files")
      ->required();
  add_dim_field(evolve_cmd);
  add_p(evolve_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (!parse_p(p_text, opt.p)) {
    std::fputs("--p must be a real number or 'inf'\n", stderr);
    return 1;
  }
  opt.variant = parse_variant(variant_text);
  opt.direction = direction_text == "pullback"
                      ? hyperph::Direction::pullback
                      : hyperph::Direction::pushforward;

  hyperph::CommandResult res;
  if (*complex_cmd)
    res = hyperph::cmd_complex(file_a);
  else if (*persist_cmd)
    res = hyperph::cmd_persist(file_a, opt);
  else if (*distance_cmd)
    res = hyperph::cmd_distance(file_a, file_b, opt);
  else if (*morphism_cmd)
    res = hyperph::cmd_morphism(file_a, file_b, map_file, opt);
  else if (*evolve_cmd)
    res = hyperph::cmd_evolve(dir, opt);

  std::fputs(res.out.c_str(), stdout);
  std::fputs(res.err.c_str(), stderr);
  return res.code;
}
