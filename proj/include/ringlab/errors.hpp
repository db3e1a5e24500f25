#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

enum class Err {
    NotAGroup,
    NotAssociative,
    NotDistributive,
    UnsupportedSpec,
    OrderLimitExceeded,
    ParentMismatch,
    SizeLimitExceeded,
    NotASubset,
    NotAVertexSubset,
    NoUnity,
    NotAGeneratingSet,
    NotASubgroup,
    NotASubring,
    ParseError,
    SchemaError,
    IoError,
};

const char* err_name(Err code);

// Single exception type; `code` distinguishes the failure class and `what()`
// carries the first witness found (a triple, a row index, ...).
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

} // namespace ringlab
