#pragma once

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsx {

// Data and contract violations (bad files, precondition failures). The CLI
// maps these to exit code 2; usage problems exit 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-fatal diagnostics. Callers that care pass a sink; everyone else gets
// the message on stderr.
inline void warn(std::vector<std::string>* sink, std::string msg) {
    if (sink) {
        sink->push_back(std::move(msg));
    } else {
        std::cerr << "warning: " << msg << "\n";
    }
}

}  // namespace hsx
