#pragma once

#include <string>
#include <vector>

#include "chaincount/export.hpp"

namespace chaincount {

// One recomputed claim from the audited article. `published` is the value
// the article states, `computed` what this artifact's methods produce.
// MATCH / MISMATCH is decided by strict comparison (for lower-bound claims,
// by whether the computed value satisfies the stated bound); MISMATCH is a
// report outcome, never an error. NOT_COMPARABLE is reserved for claims
// with no decidable reading; the current catalog decides every claim.
struct AuditEntry {
  std::string claim;
  std::string location;
  std::string kind;  // equality | census | label | lower_bound
  Json published;
  Json computed;
  std::string status;  // MATCH | MISMATCH | NOT_COMPARABLE
};

struct AuditReport {
  int catalog_version = 1;
  std::vector<AuditEntry> entries;

  int count(const std::string& status) const;
};

// Recomputes every cataloged value (the chain counts of S3..S5, A4, A5, the
// small dihedral and cyclic groups, the S5 maximal-subgroup structure and
// its inclusion-exclusion ledger) and compares each against the article's
// stated number. Runs end-to-end in one call; deterministic output.
AuditReport run_audit();

Json audit_to_json(const AuditReport& report);
std::string audit_to_text(const AuditReport& report);
std::string audit_to_csv(const AuditReport& report);

}  // namespace chaincount
