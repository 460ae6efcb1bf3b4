#include "phmon/catalog.hpp"

#include <map>

#include "phmon/embedded_data.hpp"

namespace phmon {

namespace {

using RelList = std::vector<std::pair<std::string, std::string>>;

Presentation abc(const RelList& rels, std::string name) {
  return make_presentation({"a", "b", "c"}, rels, std::move(name));
}

// One entry per catalog label; words are spelled exactly as in the defining
// relation lists, with chains u=v=w split into adjacent pairs.
const std::map<std::string, Presentation, std::less<>>& table() {
  static const std::map<std::string, Presentation, std::less<>> t = [] {
    std::map<std::string, Presentation, std::less<>> m;
    m.emplace("A_i", abc({{"ab", "ba"}, {"bcb", "cbc"}, {"aca", "cac"}}, "A_i"));
    m.emplace("A_ii", abc({{"aba", "bab"}, {"b", "c"}}, "A_ii"));
    m.emplace("B_i", abc({{"abab", "baba"}, {"bc", "cb"}, {"aca", "cac"}}, "B_i"));
    m.emplace("B_ii", abc({{"cbb", "bba"}, {"bc", "ab"}, {"ac", "ca"}}, "B_ii"));
    m.emplace("B_iii", abc({{"a", "b"}, {"ac", "ca"}}, "B_iii"));
    m.emplace("B_iv", abc({{"ab", "ba"}, {"bcb", "cbc"}, {"ac", "ca"}}, "B_iv"));
    m.emplace("B_v", abc({{"a", "b"}, {"b", "c"}}, "B_v"));
    m.emplace("B_vi", abc(
                          {
                              {"aba", "bab"},
                              {"bcb", "cbc"},
                              {"aca", "bac"},
                              {"cab", "bca"},
                              {"acb", "cac"},
                              {"abb", "bbc"},
                              {"bcca", "ccac"},
                              {"bbac", "caab"},
                              {"cbbb", "bbba"},
                              {"acbcb", "bccca"},
                              {"accbb", "bccba"},
                              {"accaa", "ccaac"},
                              {"caacc", "aacca"},
                              {"acccc", "bcccb"},
                              {"bbaac", "cbaab"},
                              {"caaab", "abaac"},
                              {"aaaaa", "bbbbb"},
                              {"bbbbb", "ccccc"},
                              {"ccbaac", "accbaa"},
                          },
                          "B_vi"));
    m.emplace("B_vii", abc({{"a", "b"}, {"b", "c"}}, "B_vii"));
    m.emplace("H_i", abc({{"ababa", "babab"}, {"bc", "cb"}, {"aca", "cac"}}, "H_i"));
    m.emplace("H_ii", parse_presentation(embedded::kHiiRelations, "H_ii"));
    m.emplace("H_iii", abc(
                           {
                               {"aba", "bab"},
                               {"aca", "cac"},
                               {"bcb", "abc"},
                               {"cba", "acb"},
                               {"bca", "cbc"},
                               {"baa", "aac"},
                               {"accb", "ccbc"},
                               {"aabc", "cbba"},
                               {"caaa", "aaab"},
                               {"bcaca", "acccb"},
                               {"bccaa", "accab"},
                               {"bccbb", "ccbbc"},
                               {"cbbcc", "bbccb"},
                               {"bcccc", "accca"},
                               {"aabbc", "cabba"},
                               {"cbbba", "babbc"},
                               {"aaaaa", "bbbbb"},
                               {"bbbbb", "ccccc"},
                               {"ccabbc", "bccabb"},
                           },
                           "H_iii"));
    m.emplace("H_iv", abc({{"a", "b"}, {"b", "c"}}, "H_iv"));
    m.emplace("H_v", abc({{"a", "b"}, {"b", "c"}}, "H_v"));
    m.emplace("H_vi", abc({{"a", "b"}, {"b", "c"}}, "H_vi"));
    m.emplace("H_vii", abc({{"a", "b"}, {"b", "c"}}, "H_vii"));
    m.emplace("H_viii", abc({{"a", "b"}, {"b", "c"}}, "H_viii"));
    m.emplace("B_ii_alt",
              abc({{"ababab", "bababa"}, {"b", "c"}, {"aabab", "baaba"}}, "B_ii_alt"));
    return m;
  }();
  return t;
}

}  // namespace

const std::vector<std::string>& catalog_types() {
  static const std::vector<std::string> types = {
      "A_i",  "A_ii", "B_i",  "B_ii", "B_iii", "B_iv",  "B_v",    "B_vi",    "B_vii",
      "H_i",  "H_ii", "H_iii", "H_iv", "H_v",   "H_vi",  "H_vii",  "H_viii",  "B_ii_alt"};
  return types;
}

bool catalog_has(std::string_view type_name) { return table().count(type_name) != 0; }

Presentation catalog_lookup(std::string_view type_name) {
  auto it = table().find(type_name);
  if (it == table().end())
    throw std::invalid_argument("unknown presentation type: " + std::string(type_name));
  return it->second;
}

const std::vector<std::string>& artin_types() {
  static const std::vector<std::string> types = {"A_i", "A_ii", "B_i", "B_iv", "H_i"};
  return types;
}

}  // namespace phmon
