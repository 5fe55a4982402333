#pragma once

#include <stdexcept>
#include <string>

namespace oramsey {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vertex count or parameter outside the supported range.
struct SizeError : Error {
    using Error::Error;
};

struct ArgumentError : Error {
    using Error::Error;
};

struct LoopError : Error {
    using Error::Error;
};

/// Adding the arc would create a 2-cycle.
struct AntisymmetryError : Error {
    using Error::Error;
};

/// Residue rules of a circulant produce a loop or a 2-cycle.
struct ConstructionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_{line} {}

    int line() const { return line_; }

  private:
    int line_;
};

} // namespace oramsey
