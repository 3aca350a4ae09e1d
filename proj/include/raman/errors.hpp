#ifndef RAMAN_ERRORS_HPP
#define RAMAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace raman {

// Initial-state cutoff too small to capture the requested probability mass.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double tail)
        : std::runtime_error(what), tail_mass(tail) {}
    double tail_mass;
};

// Explicit time stepper asked to run outside its stability region.
class stability_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical route lost too many digits (alternating sums, quadrature).
class precision_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested ordering parameter outside what the reconstruction supports.
class unsupported_ordering_error : public std::domain_error {
    using std::domain_error::domain_error;
};

// Scenario file failed validation; `field` is the offending key path.
class schema_error : public std::runtime_error {
public:
    schema_error(const std::string& field_path, const std::string& what)
        : std::runtime_error(field_path + ": " + what), field(field_path) {}
    std::string field;
};

} // namespace raman

#endif
