#include "gtz/correspondence.hpp"

#include <algorithm>
#include <cassert>

#include "gtz/claimed_basis.hpp"
#include "gtz/errors.hpp"
#include "gtz/tableaux.hpp"

namespace gtz {

HighestWeight gl_target_weight(const HighestWeight& b_weight) {
  b_weight.validate();
  if (b_weight.algebra != Algebra::B) {
    throw InvalidWeight("expected a B weight: " + b_weight.str());
  }
  const int drop = b_weight.half_integer() ? 1 : 0;
  std::vector<int> entries2 = b_weight.entries2;
  for (int& e : entries2) e -= drop;
  return HighestWeight::gl(std::move(entries2));
}

std::optional<HighestWeight> gl_lowered_weight(const HighestWeight& target) {
  if (target.entries2.back() < 2) return std::nullopt;
  std::vector<int> entries2 = target.entries2;
  for (int& e : entries2) e -= 2;
  return HighestWeight::gl(std::move(entries2));
}

CorrespondenceImage correspond_exponents(const ExponentTuple& t, const HighestWeight& b_weight) {
  CorrespondenceImage image;
  image.sigma = ((t.p_minus1 % 2) + 2) % 2;
  image.p_prime = t.p_minus1 / 2;
  image.pairs = t.pairs;
  image.target_weight = gl_target_weight(b_weight);
  return image;
}

ExponentTuple gl_tuple_of(const CorrespondenceImage& image) {
  ExponentTuple t;
  t.p_minus1 = image.p_prime;
  t.pairs = image.pairs;
  return t;
}

Poly soot_apply(const Poly& f, int sigma) {
  assert(sigma == 0 || sigma == 1);
  std::map<VarId, Poly> assignment;
  assignment[VarId::z(-1, 1)] = Poly::variable(VarId::z(0, 1), 2) * Rational(1, 2);
  Poly image = substitute(f, assignment);
  if (sigma == 1) image *= Poly::variable(VarId::z(0, 1));
  return image;
}

CorrespondenceChecks check_correspondence_claims(const HighestWeight& b_weight) {
  CorrespondenceChecks checks;
  checks.target_weight = gl_target_weight(b_weight);

  const std::vector<ExponentTuple> b_tuples = enumerate_exponents_b(b_weight);
  const std::vector<ExponentTuple> gl_tuples = enumerate_exponents_gl(checks.target_weight);
  checks.gl_tuple_count = static_cast<int>(gl_tuples.size());

  // Halve even tuples and compare the image set with the GL tuple set.
  std::vector<ExponentTuple> even_images;
  for (const ExponentTuple& t : b_tuples) {
    if (t.p_minus1 % 2 == 0) {
      ++checks.even_count;
      even_images.push_back(gl_tuple_of(correspond_exponents(t, b_weight)));
    } else {
      ++checks.odd_count;
    }
  }
  auto key = [](const ExponentTuple& t) {
    std::vector<int> k{t.p_minus1};
    for (const auto& [p, q] : t.pairs) {
      k.push_back(p);
      k.push_back(q);
    }
    return k;
  };
  std::vector<std::vector<int>> image_keys, gl_keys;
  for (const auto& t : even_images) image_keys.push_back(key(t));
  for (const auto& t : gl_tuples) gl_keys.push_back(key(t));
  std::sort(image_keys.begin(), image_keys.end());
  std::sort(gl_keys.begin(), gl_keys.end());
  const bool distinct =
      std::adjacent_find(image_keys.begin(), image_keys.end()) == image_keys.end();
  checks.sop1_bijection = distinct && image_keys == gl_keys;

  // Odd tuples against tableau counts for the target top row.
  std::vector<int> top2 = checks.target_weight.entries2;
  top2.push_back(0);
  for (const GlTableau& t : enumerate_gl_tableaux(top2)) {
    ++checks.gl_tableau_count;
    if (t.middle2.back() > 0) ++checks.gl_tableau_mpos_count;
  }
  const long long expected_odd =
      b_weight.half_integer() ? checks.gl_tableau_count : checks.gl_tableau_mpos_count;
  checks.sop2_count = checks.odd_count == expected_odd;

  checks.detail = "even " + std::to_string(checks.even_count) + " vs gl tuples " +
                  std::to_string(checks.gl_tuple_count) + "; odd " +
                  std::to_string(checks.odd_count) + " vs " +
                  (b_weight.half_integer() ? "all tableaux " : "tableaux with m'>0 ") +
                  std::to_string(expected_odd);
  return checks;
}

}  // namespace gtz
