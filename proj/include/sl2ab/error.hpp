#ifndef SL2AB_ERROR_HPP_
#define SL2AB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sl2ab {

enum class error_kind {
    invalid_input,
    invalid_profile,
    not_p_maximal,   // Z[theta] fails Dedekind's test; caller must supply splitting data
    precondition,    // theorem hypotheses (infinitely many units) not met
    not_covered,     // finite units and no recorded value
    resource,        // oracle enumeration budget exceeded
    parse,
};

class error : public std::runtime_error {
  public:
    error(error_kind kind, std::string const& what)
        : std::runtime_error(what), kind_(kind) {}
    error_kind kind() const noexcept { return kind_; }

  private:
    error_kind kind_;
};

[[noreturn]] inline void fail(error_kind kind, std::string const& what)
{
    throw error(kind, what);
}

}  // namespace sl2ab

#endif /* SL2AB_ERROR_HPP_ */
