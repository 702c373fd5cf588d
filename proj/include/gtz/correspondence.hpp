#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtz/systems.hpp"

namespace gtz {

// Image of a B exponent tuple on the GL side: sigma is the parity of
// p_{-1}, p_prime its half, the pairs carry over, and the target is the GL
// weight whose indicator exponents are (r_{-n}, ..., r_{-2}, floor(r_{-1}/2)).
// Concretely the target weight is m itself for integer weights and m - 1/2
// for half-integer weights.
struct CorrespondenceImage {
  int p_prime{0};
  int sigma{0};
  std::vector<std::pair<int, int>> pairs;
  HighestWeight target_weight;
};

// GL weight targeted by a B weight.
HighestWeight gl_target_weight(const HighestWeight& b_weight);

// Target weight with every entry lowered by 1 (used by the sigma = 1 branch
// for integer weights); empty when the lowered vector leaves the dominant
// cone (last entry would go negative).
std::optional<HighestWeight> gl_lowered_weight(const HighestWeight& target);

CorrespondenceImage correspond_exponents(const ExponentTuple& t, const HighestWeight& b_weight);

// GL exponent tuple reconstructed from an image (drops sigma).
ExponentTuple gl_tuple_of(const CorrespondenceImage& image);

// The substitution map: f(..., z[-1,1]) -> z[0,1]^sigma * f(..., (1/2) z[0,1]^2).
Poly soot_apply(const Poly& f, int sigma);

// Tuple-level consequences of the correspondence, computed verbatim.
struct CorrespondenceChecks {
  HighestWeight target_weight;
  int even_count{0};        // admissible B tuples with even p_{-1}
  int odd_count{0};         // admissible B tuples with odd p_{-1}
  int gl_tuple_count{0};    // admissible GL tuples of the target weight
  bool sop1_bijection{false};  // halving map is a bijection onto the GL tuples
  long long gl_tableau_count{0};        // tableaux with the target top row
  long long gl_tableau_mpos_count{0};   // those with last middle entry > 0
  bool sop2_count{false};  // odd count vs tableaux (m'>0 for integer, all for half-integer)
  std::string detail;
};

CorrespondenceChecks check_correspondence_claims(const HighestWeight& b_weight);

}  // namespace gtz
