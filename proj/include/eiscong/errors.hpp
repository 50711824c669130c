#ifndef EISCONG_ERRORS_HPP
#define EISCONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eiscong {

// Domain-level failure with a stable machine-readable code
// ("not-odd", "not-primitive", "invalid-order", ...). The CLI maps these
// to exit code 1 and a JSON error object.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, std::string detail)
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)), detail_(std::move(detail)) {}

    const std::string& code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

} // namespace eiscong

#endif
