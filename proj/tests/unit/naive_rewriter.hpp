#pragma once

#include <set>
#include <string>
#include <vector>

// Deliberately naive string rewriter used as an independent oracle. It
// shares no code with the engine under test: words are std::strings over
// single-character letter names, and every answer comes from direct
// substring substitution and exhaustive enumeration.
namespace naive {

using Rules = std::vector<std::pair<std::string, std::string>>;

std::set<std::string> neighbors(const Rules& rules, const std::string& word);
std::set<std::string> equivalence_class(const Rules& rules, const std::string& word);
bool equivalent(const Rules& rules, const std::string& u, const std::string& v);

// all words of the given length over the alphabet
std::vector<std::string> all_words(const std::string& alphabet, std::size_t length);

// existence of x with u+x ~ w (left) or x+u ~ w (right), by enumerating
// every candidate x
bool divides(const Rules& rules, const std::string& alphabet, const std::string& u,
             const std::string& w, bool left);

// canonical representatives of the classes of all witnesses x
std::set<std::string> quotients(const Rules& rules, const std::string& alphabet,
                                const std::string& u, const std::string& w, bool left);

}  // namespace naive
