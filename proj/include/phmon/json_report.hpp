#pragma once

#include <nlohmann/json.hpp>

#include "phmon/discriminant.hpp"
#include "phmon/divisibility.hpp"
#include "phmon/representation.hpp"
#include "phmon/structure.hpp"

// JSON projections of the library's report types, shared by the CLI. Key
// order is alphabetical (nlohmann object ordering), so identical requests
// serialize byte-identically.
namespace phmon::json_report {

using nlohmann::json;

json word(const Presentation& p, const Word& w);
json words(const Presentation& p, const std::vector<Word>& ws);
json sigma(const Presentation& p, const PermutationSigma& s);
json sigmas(const Presentation& p, const std::vector<PermutationSigma>& s);
json budget(const BudgetExceeded& b, std::uint64_t budget_nodes);

json equiv_class(const Presentation& p, const EquivClass& c, bool full,
                 std::size_t member_limit);
json derivation(const Presentation& p, const Derivation& d);
json fundamental_witness(const Presentation& p, const FundamentalWitness& w);
json cancellation(const Presentation& p, const CancellationReport& r);
json table_verification(const Presentation& p, const TableVerification& tv);
json matrix(const Matrix2& m);
json representation_report(const RepresentationReport& r, const Presentation& p);
json omega_verdict(const OmegaVerdict& v);

}  // namespace phmon::json_report
