/* family.hpp -- parameterized benchmark formula families */

#ifndef WS1S_FAMILY_HPP
#define WS1S_FAMILY_HPP

#include <string>

namespace ws1s {

/// Text of a family instance in the concrete grammar.  "chain" asserts the
/// existence of an ascending chain of n sets inside a bound Y, with k
/// quantifier alternations in the prefix:
///   ex2 Y: ~ex2 X1: ... ~ex2 Xk, ..., Xn: /\ (Xi sub Y & Xi < Xi+1) => Xi+1 sub Y
/// Strict inclusion and implication are expanded into the minimal syntax.
/// Requires n >= 2 and 1 <= k <= n-1.
std::string generate_family(const std::string& name, int n, int k);

}  // namespace ws1s

#endif
