#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hyperph/persistence.hpp"

namespace hyperph {

// Outcome of one CLI command. code 0: success; 1: invalid input data or
// options; 2: malformed input file.
struct CommandResult {
  int code = 0;
  std::string out;
  std::string err;
};

struct CommandOptions {
  int dim = 1;
  double p = std::numeric_limits<double>::infinity();
  std::uint32_t field = 2;
  Variant variant = Variant::embedded;
  Direction direction = Direction::pushforward;
  std::vector<std::string> arrows;  // empty: surfaced set; "all": every arrow
};

// Lists the associated and lower-associated complexes of a hypergraph file.
CommandResult cmd_complex(const std::string& path);

// Persistence diagram of one filtration variant as dim,birth,death CSV.
CommandResult cmd_persist(const std::string& path, const CommandOptions& opt);

// Distance between two filtrations of a common hypergraph: the largest
// diagram distance over the three variants, printed as a single number.
CommandResult cmd_distance(const std::string& path_a,
                           const std::string& path_b,
                           const CommandOptions& opt);

// Kernel / image / cokernel diagrams of the homology maps induced by a
// morphism, as arrow,part,dim,birth,death CSV. The filtration is read from
// the domain file under --direction pushforward and from the codomain file
// under pullback.
CommandResult cmd_morphism(const std::string& domain_path,
                           const std::string& codomain_path,
                           const std::string& map_path,
                           const CommandOptions& opt);

// Report over a directory of <timestamp>.hg snapshots: a diagram block per
// snapshot, then per consecutive pair the distance between the pull-back and
// push-forward readings of each surfaced arrow along the inclusion morphism.
CommandResult cmd_evolve(const std::string& dir, const CommandOptions& opt);

}  // namespace hyperph
