#ifndef SL2AB_VERIFY_HPP_
#define SL2AB_VERIFY_HPP_

#include <string>
#include <vector>

namespace sl2ab {

struct case_result {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct suite_report {
    std::string name;
    std::vector<case_result> cases;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

/* Cross-checks run by `sl2ab verify`: closed-form tables against the live
 * splitting path, and the brute-force oracle against the local-ring and
 * product formulas. */
std::vector<std::string> const& suite_names();  // without "all"
suite_report run_suite(std::string const& name);  // throws invalid_input for unknown names

}  // namespace sl2ab

#endif /* SL2AB_VERIFY_HPP_ */
