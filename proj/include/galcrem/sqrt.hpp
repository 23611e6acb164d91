// Square roots in the coefficient fields.
#pragma once

#include <optional>
#include <string>

#include "galcrem/fields.hpp"

namespace galcrem {

struct PrecisionBudget {
  unsigned start_bits = 128;
  /// Working precision is doubled until it exceeds this.
  unsigned max_bits = 2048;
  /// Sign patterns tried per precision level (cyclotomic fields).
  unsigned max_patterns = 4096;
};

enum class SqrtStatus { found, none, undetermined };

std::string to_string(SqrtStatus s);

struct SqrtResult {
  SqrtStatus status = SqrtStatus::undetermined;
  std::optional<FieldElement> root;  // set iff status == found; root^2 == c
};

/// Exact in Q (perfect-square test on numerator and denominator) and F_p
/// (Tonelli-Shanks). In Q(zeta_n) a candidate is reconstructed from complex
/// embeddings and verified exactly; failure to verify within the budget is
/// reported as undetermined.
SqrtResult sqrt_in_field(const FieldElement& c, const PrecisionBudget& budget = {});

}  // namespace galcrem
