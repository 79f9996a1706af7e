#pragma once

#include <stdexcept>

namespace dzv {

// A truncation schedule hit its hard caps before meeting the target radius.
class PrecisionUnreachable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dzv
