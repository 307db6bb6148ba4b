#pragma once

#include <optional>
#include <string>

#include "springerlab/induction.hpp"

namespace springerlab {

// Text formats used by the CLI and the JSON layer:
//   partition   "[5,3,1]", "[]"; exponent shorthand "[1^5]" accepted on input
//   group       "B5"
//   class       "B5:[5,3,1]"
//   bipartition "([3],[2])"
//   u-symbol    "B:(0 5 / 2)"
//   subgroup    "B5 <= C2xC3", "B5 <= A2xC2"
//   factor reps "([1],[1]);([2],[])" (A factors take "[1,1,1]")

std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& text);

std::string format_group(const GroupType& g);
GroupType parse_group(const std::string& text);

std::string format_class(const UnipotentClass& cls);

std::string format_bipartition(const Bipartition& e);
Bipartition parse_bipartition(const GroupType& group, const std::string& text);

std::string format_usymbol(const USymbol& u);
// The rank is recovered from the entries for ordinary-defect input; pass it
// explicitly otherwise.
USymbol parse_usymbol(const std::string& text, std::optional<int> rank = std::nullopt);

std::string format_subgroup(const SubgroupSpec& sub);
SubgroupSpec parse_subgroup(const std::string& text);

std::string format_factor_rep(const FactorRep& rep);
std::vector<FactorRep> parse_factor_reps(const SubgroupSpec& sub, const std::string& text);

std::string format_virtual_rep(const VirtualRep& rep);

} // namespace springerlab
