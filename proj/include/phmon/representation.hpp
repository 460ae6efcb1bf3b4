#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phmon/matrix2.hpp"
#include "phmon/presentation.hpp"

namespace phmon {

enum class RepType { B_ii, B_vi, H_ii, H_iii };
enum class RingBranch { Default, I, II };  // I/II select the H_ii root pair

RepType rep_type_from_string(std::string_view s);
std::string to_string(RepType t);
std::string to_string(RingBranch b);

// A two-dimensional representation: the images of the generators a, b, c
// over an explicit quotient ring, normalized to unit determinant scale
// (u = v = 1) with the free off-diagonal parameter set to 1.
struct Representation {
  RepType type;
  RingBranch branch;
  RingPtr ring;
  Matrix2 A, B, C;
};

// Instantiates the matrix family for the given type. Branch is required for
// H_ii (I or II) and must be Default for the other types.
Representation build_representation(RepType type, RingBranch branch = RingBranch::Default);

struct RelationCheck {
  Relation relation;
  bool holds = false;
  std::string lhs_value;  // printed matrices, filled on failure
  std::string rhs_value;
};

struct RepresentationReport {
  RepType type;
  RingBranch branch;
  bool all_hold = false;
  std::size_t relation_count = 0;
  std::vector<RelationCheck> failures;
  bool all_invertible = false;
};

// Checks every defining relation of the type's catalog presentation as an
// exact matrix identity.
RepresentationReport verify_representation(const Representation& rep);

struct CommutatorWitness {
  std::string x, y;     // generator names
  Matrix2 commutator;   // x y x^-1 y^-1
};

// First pair of generator images with a nontrivial commutator, if any.
std::optional<CommutatorWitness> nonabelian_witness(const Representation& rep);

// Image of a word under the representation (a, b, c -> A, B, C).
Matrix2 evaluate_word(const Representation& rep, const Word& w);

}  // namespace phmon
