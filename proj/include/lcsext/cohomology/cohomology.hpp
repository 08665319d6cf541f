#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcsext/cohomology/cochains.hpp"
#include "lcsext/extension/classify.hpp"

namespace lcsext::cohomology {

using abelian::BigInt;

/// Invariant factors of ker d^n / im d^{n-1} (im d^0 = 0).  Throws
/// std::invalid_argument for n = 0, GuardError and ActionLawError as total_complex.
std::vector<BigInt> cohomology(const ComplexSetup& setup, std::size_t n);

BigInt group_order(const std::vector<BigInt>& invariant_factors);

/// (beta, f) on H\{0} x H\{0} as an element of C^2 = C^{02} + C^{11}; f is
/// negated under the verbatim convention.  Throws std::invalid_argument
/// unless beta is symmetric and both tables vanish on pairs containing 0.
abelian::Vector degree2_cochain(const ComplexSetup& setup, const Table& beta, const Table& f);
/// Inverse of degree2_cochain.
extension::Cocycle degree2_tables(const ComplexSetup& setup, const abelian::Vector& x);
/// phi as an element of C^1 = C^{01}, and back; phi(0) = 0.
abelian::Vector degree1_cochain(const ComplexSetup& setup, const std::vector<Index>& phi);
std::vector<Index> degree1_table(const ComplexSetup& setup, const abelian::Vector& x);

struct CocycleVerdicts {
  /// d^2(beta, f) = 0
  bool matrix = false;
  /// the beta cocycle law, beta normalized and symmetric, and the two
  /// compatibility identities of beta, f with <> and <|, evaluated on all of H
  bool direct = false;
};

CocycleVerdicts cocycle_verdicts(const ComplexSetup& setup, const Table& beta, const Table& f);

/// d^2(beta, f) = 0; throws std::logic_error if the direct evaluation disagrees.
bool is_2cocycle(const ComplexSetup& setup, const Table& beta, const Table& f);

/// Least phi with d^1 phi = (beta, f), if any.  Throws std::invalid_argument
/// if (beta, f) is not a cocycle.
std::optional<std::vector<Index>> is_2coboundary(const ComplexSetup& setup, const Table& beta, const Table& f);

/// One cocycle per class of H^2, each the least element of its coset of im d^1.
/// Throws GuardError when there are more than max_classes classes.
std::vector<extension::Cocycle> h2_representatives(const ComplexSetup& setup, std::size_t max_classes = 100'000);

struct ExtVsH2Report {
  std::vector<BigInt> h2_invariants;
  BigInt h2_order;
  std::size_t class_count = 0;
  bool counts_agree = false;
  /// Same class as extensions iff the difference of the cocycles is a coboundary.
  bool coboundary_matches_equivalence = false;
  /// First pair of cocycle indices where the two notions differ.
  std::optional<std::pair<std::size_t, std::size_t>> mismatch;
  extension::Classification classification;
};

/// Compares |H^2| with the number of extension classes for trivial I.
ExtVsH2Report ext_vs_h2_report(const LinearCycleSet& I, const LinearCycleSet& H,
                               const extension::ActionPair& actions, const extension::ClassifyLimits& limits = {},
                               SignConvention sign = SignConvention::corollary);

}  // namespace lcsext::cohomology
