#pragma once

#include <variant>
#include <vector>

#include "phmon/rewrite.hpp"
#include "phmon/support.hpp"

namespace phmon {

// Common multiples of a pair of elements at one fixed length: canonical
// representatives of every class of that length divisible by both factors
// on the given side, in canonical order.
struct MultipleSet {
  Side side;
  Word u;
  Word v;
  std::size_t length;
  std::vector<Word> multiples;
};

struct LcmFound {
  Word lcm;  // canonical representative
};

// Finite refutation: `minimal` is a common multiple of minimal length that
// fails to divide the common multiple `witness`, so no least common
// multiple exists among the lengths scanned.
struct NoLcmUpTo {
  std::size_t max_length;
  Word minimal;
  Word witness;
};

using LcmCertificate = std::variant<LcmFound, NoLcmUpTo, BudgetExceeded>;

// u divides w from the given side, i.e. some x satisfies u*x = w (left)
// or x*u = w (right) in the monoid. Decided on the class of w: a member
// must carry a prefix (suffix) lying in the class of u.
Verdict divides(const RewriteEngine& eng, const Word& u, const Word& w, Side side,
                SearchBudget b = {});

// Canonical representatives of the classes of all witnesses x with
// u*x = w (left) resp. x*u = w (right). Empty exactly when u does not
// divide w.
Result<std::vector<Word>> quotients(const RewriteEngine& eng, const Word& u, const Word& w,
                                    Side side, SearchBudget b = {});

Result<MultipleSet> common_multiples(const RewriteEngine& eng, const Word& u, const Word& v,
                                     Side side, std::size_t length, SearchBudget b = {});

// Searches lengths max(l(u), l(v)) .. max_length for common multiples and
// either exhibits one dividing all of them or a refutation pair. Budget
// exhaustion, or an empty search range with no common multiple at all,
// yields BudgetExceeded with an explanatory context.
LcmCertificate lcm_certificate(const RewriteEngine& eng, const Word& u, const Word& v, Side side,
                               std::size_t max_length, SearchBudget b = {});

}  // namespace phmon
