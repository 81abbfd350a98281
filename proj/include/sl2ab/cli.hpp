#ifndef SL2AB_CLI_HPP_
#define SL2AB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "sl2ab/error.hpp"

namespace sl2ab::cli {

enum exit_code : int {
    ok = 0,
    verification_failed = 1,
    theorem_not_applicable = 2,
    not_p_maximal = 3,
    bad_input = 4,
    budget_exceeded = 5,
};

int exit_code_for(error_kind kind);

/* Entry point of the sl2ab tool; args excludes the program name.
 * Deterministic for fixed arguments. */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace sl2ab::cli

#endif /* SL2AB_CLI_HPP_ */
