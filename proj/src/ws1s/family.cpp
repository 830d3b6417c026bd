/* family.cpp -- benchmark formula generator */

#include "ws1s/family.hpp"

#include <sstream>
#include <stdexcept>

namespace ws1s {

std::string generate_family(const std::string& name, int n, int k) {
    if (name != "chain") throw std::invalid_argument("unknown formula family: " + name);
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("chain family requires n >= 2 and 1 <= k <= n-1");

    std::ostringstream os;
    os << "ex2 Y: ";
    for (int i = 1; i < k; ++i) os << "~ex2 X" << i << ": ";
    os << "~ex2 X" << k;
    for (int i = k + 1; i <= n; ++i) os << ", X" << i;
    os << ": ";

    for (int i = 1; i < n; ++i) {
        if (i > 1) os << " & ";
        // (Xi sub Y & Xi strictly below Xi+1) implies Xi+1 sub Y
        os << "(~(X" << i << " sub Y & X" << i << " sub X" << i + 1 << " & ~X" << i + 1
           << " sub X" << i << ") | X" << i + 1 << " sub Y)";
    }
    return os.str();
}

}  // namespace ws1s
