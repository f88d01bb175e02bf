#pragma once

#include <stdexcept>
#include <string>

namespace fuzzybv {

/// Envelope data that does not describe a fuzzy number.
class InvalidShape : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A scalar input that is NaN or infinite.
class InvalidValue : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Index outside the domain of a sequence or weight scheme.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Weight sequence with a zero (or non-finite) term, i.e. outside the admissible set U.
class WeightError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bad run or scenario configuration. `field()` is the dotted path of the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace fuzzybv
