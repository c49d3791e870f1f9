#pragma once

/*
 * Bounded, deterministic property suites exercised by the `check` command.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwords {

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing instance, when any.
  std::string counterexample;
};

/// qbin(xy, u) against the two-factor split and qbin(x1 x2 x3, u) against
/// the three-factor split, on `instances` random instances with |x|,|y|,|u| <= 8.
CheckReport check_vandermonde(std::size_t instances = 200, unsigned seed = 1);
/// The subword-sum identity for every binary u with |u| <= max_length.
CheckReport check_mmsss(std::size_t max_length = 6);
/// Associativity of the q-shuffle for binary triples of total length <= max_total.
CheckReport check_shuffle_assoc(std::size_t max_total = 9);
/// Coefficientwise reversal between u q-shuffle v and v q-shuffle u, |u|,|v| <= max_length.
CheckReport check_reciprocity(std::size_t max_length = 4);
/// Key equality against the literal relation on all binary pairs of length
/// <= max_length, for a unit q, a nilpotent q and M = (q - 1)^2.
CheckReport check_key_soundness(std::size_t max_length = 6);

std::vector<std::string> check_suite_names();
/// nullopt for an unknown suite.
std::optional<CheckReport> run_check(std::string_view suite);

}  // namespace qwords
