#pragma once

#include "wmb/workbench.hpp"

namespace wmb {

struct LawResult {
  enum class Status { Pass, Fail, Skip };
  std::string id;
  Status status = Status::Pass;
  bool sampled = false;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string witness;      // on Fail: the tuple and both sides, exact values
  std::string skip_reason;  // on Skip

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }
};

struct LawReport {
  std::vector<LawResult> results;

  void add(LawResult r) { results.push_back(std::move(r)); }
  bool all_passed() const;
  const LawResult* find(const std::string& id) const;
  int failures() const;
};

struct LawInfo {
  std::string id;
  std::string family;     // ALG, AX, REG, DERIVED, META, B, C, S, M
  std::string statement;  // the identity being checked, in plain notation
  bool needs_regular = false;
  bool dense_only = false;
};

// Every law id known to the workbench, with its statement string.
const std::vector<LawInfo>& law_registry();
const LawInfo* law_info(const std::string& id);

// Core suite: algebra sanity, axioms (i)-(vi) with the regular rewrites,
// E Delta(a) = Delta(a) = Delta(a) E, and the derived projection identities.
// Laws gated on missing structure are reported as skipped; once a family
// fails, dependent families are skipped rather than failed.
LawReport verify(Workbench& wb, const std::vector<std::string>& law_ids);
LawReport verify_axioms(Workbench& wb);

// The four equivalent statements of the counit compatibility proposition
// (plus the four symmetric regular ones); passes iff they agree.
struct ViEquivalents {
  std::vector<std::pair<std::string, bool>> statements;
  bool agree = true;
  std::string detail;
};
ViEquivalents vi_equivalents(Workbench& wb);

struct Classification {
  bool regular = false;
  bool left_full = false, right_full = false;
  bool mult_bialgebra = false;
  bool full_criteria_agree = true;  // right (3)/(4)/(5) and left mirrors
  bool mba_criteria_agree = true;   // the four E=1 criteria
  bool sampled = false;
  std::string detail;
};
Classification classify(Workbench& wb);

struct CounitSolve {
  int solution_dim = -1;  // dimension of the affine solution set
  bool matches_declared = false;
  std::vector<Rat> solution;  // the particular solution found
};
// Solve the linear system imposed on the counit by the counitality and
// counit-compatibility identities with mu, Delta, E fixed (dense only).
CounitSolve solve_counit(Workbench& wb);

}  // namespace wmb
