#pragma once

#include <stdexcept>
#include <string>

namespace gwmono {

// Malformed or inconsistent input: wrong dimensions, bad indices, unnormalized
// coefficients, unparsable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested dense representation would exceed the configured amplitude cap.
class SizeError : public InputError {
public:
    using InputError::InputError;
};

// A theorem or bound was asked for outside the parameter set it is stated on.
class HypothesisError : public std::domain_error {
public:
    HypothesisError(std::string hypothesis, const std::string& detail)
        : std::domain_error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

}  // namespace gwmono
