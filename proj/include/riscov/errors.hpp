#pragma once

#include <stdexcept>

namespace riscov {

// Invalid or inconsistent user-supplied configuration.  CLI exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed-form expression was fed values outside its geometric domain
// (beyond floating-point slop).
struct geometry_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A transform was requested at a point where the underlying moment
// integral diverges.
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature rule exhausted its evaluation budget.  CLI exit code 4.
struct nonconvergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace riscov
