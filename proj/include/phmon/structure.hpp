#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phmon/divisibility.hpp"
#include "phmon/rewrite.hpp"

namespace phmon {

// A permutation of the representative letter classes of a presentation.
class PermutationSigma {
 public:
  PermutationSigma() = default;

  static PermutationSigma identity(const Presentation& p);
  // All permutations of the representative letters, in lexicographic order
  // of their image vectors (identity first).
  static std::vector<PermutationSigma> all(const Presentation& p);
  // Builds from an image table over original letters (image[i] = image of
  // letter i); must descend to a well-defined bijection on classes.
  static PermutationSigma from_images(const Presentation& p, const std::vector<Letter>& images);

  Letter apply(Letter a) const { return map_[a]; }
  Word apply(const Word& w) const;
  bool is_identity() const;

  // Composition: (*this).after(first) applies `first`, then this.
  PermutationSigma after(const PermutationSigma& first) const;

  // Pairs (representative, image), ascending by representative.
  std::vector<std::pair<Letter, Letter>> mapping(const Presentation& p) const;
  std::string to_string(const Presentation& p) const;

  friend bool operator==(const PermutationSigma&, const PermutationSigma&) = default;
  friend auto operator<=>(const PermutationSigma& a, const PermutationSigma& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<Letter> map_;  // indexed by letter; constant on classes
};

// Witness that delta is fundamental: for every representative letter a,
// one shared word D_a with delta = a*D_a = D_a*sigma(a).
struct FundamentalWitness {
  Word delta;
  PermutationSigma sigma;
  std::vector<std::pair<Letter, Word>> per_generator;  // ascending by letter
};

// All sigma with a*delta = delta*sigma(a) for every representative a.
// Empty result means delta is not quasi-central.
Result<std::vector<PermutationSigma>> quasi_central_sigmas(const RewriteEngine& eng,
                                                           const Word& delta,
                                                           SearchBudget b = {});

// All fundamental witnesses of delta, one per admissible sigma, in sigma
// order. Empty result means delta is not fundamental.
Result<std::vector<FundamentalWitness>> fundamental_witnesses(const RewriteEngine& eng,
                                                              const Word& delta,
                                                              SearchBudget b = {});

// Non-standard exploratory variant: the witnesses for delta = a*D and
// delta = D'*sigma(a) may differ. Strictly weaker than fundamental_witnesses.
Result<std::vector<PermutationSigma>> fundamental_sigmas_split_witnesses(
    const RewriteEngine& eng, const Word& delta, SearchBudget b = {});

struct QuasiCentralElement {
  Word canonical;
  std::vector<PermutationSigma> sigmas;
};

// All quasi-central classes of length 1..max_length, ascending by length
// then canonical word. The identity (length 0) is quasi-central by
// convention and excluded from the scan.
Result<std::vector<QuasiCentralElement>> quasi_center_scan(const RewriteEngine& eng,
                                                           std::size_t max_length,
                                                           SearchBudget b = {});

struct CancellationViolation {
  Letter letter;
  Side side;
  Word multiple_canonical;   // class K with u*X, u*Y in K
  Word quotient_x;           // canonical, X not equivalent to Y
  Word quotient_y;
};

struct CancellationReport {
  std::string presentation;
  std::size_t max_length = 0;  // maximal quotient length scanned
  bool complete = false;
  std::vector<CancellationViolation> violations;
};

// For every letter u, side, and quotient length r <= max_length: partitions
// the words of length r+1 and reports every class whose u-quotients split
// into more than one class. Violations are re-verified through the engine.
Result<CancellationReport> cancellation_scan(const RewriteEngine& eng, std::size_t max_length,
                                             SearchBudget b = {});

struct MorphismCheck {
  bool valid = false;
  std::optional<std::size_t> failing_relation;  // index into source relations
};

// letter_images[i] = image word (over `to`'s alphabet) of source letter i.
// Valid iff every defining relation of `from` maps to an equivalence in `to`.
Result<MorphismCheck> check_morphism(const RewriteEngine& from, const RewriteEngine& to,
                                     const std::vector<Word>& letter_images, SearchBudget b = {});

struct UniversalDenominatorReport {
  Word delta;
  std::size_t max_factor_length = 0;
  bool delta_fundamental = false;
  bool ok = false;
  // words U (canonical) with U not dividing delta^l(U) on the stated side
  std::vector<std::pair<Word, Side>> failures;
};

// Checks that every word U with l(U) <= max_factor_length divides
// delta^l(U) from both sides. Requires delta fundamental.
Result<UniversalDenominatorReport> universal_denominator_check(const RewriteEngine& eng,
                                                               const Word& delta,
                                                               std::size_t max_factor_length,
                                                               SearchBudget b = {});

struct CoxeterPowerResult {
  std::optional<unsigned> k;  // smallest power that is fundamental
  std::optional<FundamentalWitness> witness;
};

// Smallest k <= max_k with (cba)^k fundamental. Requires a three-letter
// alphabet named a, b, c (identifications applied afterwards).
Result<CoxeterPowerResult> coxeter_power_search(const RewriteEngine& eng, unsigned max_k,
                                                SearchBudget b = {});

struct DivisorSymmetryReport {
  Word delta;
  bool equal = false;
  // per length: canonical representatives present on exactly one side
  std::vector<std::pair<Word, Side>> asymmetries;
  std::size_t left_count = 0;
  std::size_t right_count = 0;
};

// Compares the set of left-divisor classes of delta with the set of
// right-divisor classes. Requires delta fundamental.
Result<DivisorSymmetryReport> divisor_symmetry_check(const RewriteEngine& eng, const Word& delta,
                                                     SearchBudget b = {});

// Expected fundamental elements per catalog type, with their permutations.
struct FundamentalTableRow {
  std::string type;
  std::string delta;                     // word over a, b, c
  std::vector<std::string> equivalents;  // other listed expressions of the same element
  std::string sigma_images;              // image of a, b, c in positional order
};

const std::vector<FundamentalTableRow>& fundamental_element_table();

struct TableElementResult {
  FundamentalTableRow row;
  bool fundamental = false;
  bool sigma_matches = false;
  bool equivalents_ok = false;
  std::size_t class_size = 0;
  std::optional<FundamentalWitness> witness;  // for the expected sigma if found
  std::vector<PermutationSigma> sigmas_found;
};

struct TableVerification {
  std::string type;
  bool all_verified = false;
  std::vector<TableElementResult> elements;
};

// Runs fundamental_witnesses on every table row of the given type and
// compares the found permutations and stated equivalent expressions.
Result<TableVerification> verify_fundamental_table(const RewriteEngine& eng,
                                                   const std::string& type, SearchBudget b = {});

}  // namespace phmon
