#pragma once

#include "gog/chiswell.hpp"
#include "gog/graph_of_groups.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace gog {

enum class CheckStatus { Pass, Fail, Skipped, Inconclusive };
const char* to_string(CheckStatus s);

enum class Verdict { Obstructed, Candidate, Unresolved };
const char* to_string(Verdict v);

struct CheckResult {
  std::string id;     // "a".."l"
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string witness;
};

struct CheckReport {
  int n = 4;
  std::vector<CheckResult> checks;
  Verdict overall = Verdict::Unresolved;

  const CheckResult& check(const std::string& id) const;
  std::vector<std::string> failing() const;
};

/// Ids of all checks in report order.
const std::vector<std::string>& check_ids();
/// Stable human-readable names keyed by id.
const std::map<std::string, std::string>& check_names();

/// Runs the necessary-condition battery. `filters` lists the check ids to run
/// (empty means all); the rest are reported as Skipped. Throws InvalidDimension
/// for odd n or n < 4, and BadInput for graphs that are not reduced and indecomposable.
CheckReport run_checks(const GraphOfGroups& g, const OrientationCharacter& omega, int n, int max_radius = 8,
                       const std::vector<std::string>& filters = {});

/// Verdict aggregation: any Fail is Obstructed, all applicable Pass is Candidate.
Verdict aggregate(const std::vector<CheckResult>& checks);

struct MappingTorusInput {
  FiniteGroup group;
  GroupHom theta;
  int k = 0;  // n = 2k; 0 when unset
};

struct NotSemidirect {
  std::string reason;
};

std::variant<MappingTorusInput, NotSemidirect> mapping_torus_extraction(const GraphOfGroups& g);

struct TorusVerdict {
  bool realizable = false;
  bool orientable = false;
  std::optional<int> period;
  std::optional<int> multiplier;  // H_{2k-1}(theta) as an element of Z/|F|
  std::string reason;
  std::string str() const;
};

/// Realizability of F semidirect_theta Z by a PD_{2k}-complex with universal cover
/// a homotopy (2k-1)-sphere. Throws UnsupportedGroup when the top homology action
/// is needed for a non-cyclic group.
TorusVerdict theorem_d_check(const MappingTorusInput& input);

bool is_nilpotent(const FiniteGroup& g);

}  // namespace gog
