#pragma once

#include <stdexcept>
#include <string>

namespace sleib {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct ZeroDenominator : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotAdapted : Error {
    NotAdapted(const std::string& msg, int i, int j, int k)
        : Error(msg), i(i), j(j), k(k) {}
    int i, j, k;  // first offending table entry
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct ZeroScale : Error {
    using Error::Error;
};
struct UnsupportedDim : Error {
    using Error::Error;
};
struct NoRationalInverse : Error {
    using Error::Error;
};
struct SubsetEmpty : Error {
    using Error::Error;
};
struct UncoveredInput : Error {
    using Error::Error;
};

}  // namespace sleib
