#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bitprobe {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class WidthMismatchError : public Error {
public:
    using Error::Error;
};

// A decision assignment tree evaluated to the same output for two inputs.
class NotBijectiveError : public Error {
public:
    NotBijectiveError(std::uint32_t a, std::uint32_t b, std::uint32_t image)
        : Error("not bijective: inputs " + std::to_string(a) + " and " + std::to_string(b) +
                " both map to " + std::to_string(image)),
          first_input(a), second_input(b), common_output(image) {}

    std::uint32_t first_input;
    std::uint32_t second_input;
    std::uint32_t common_output;
};

class FaceIntersectionError : public Error {
public:
    using Error::Error;
};

// An assignment targets a coordinate that is free in the face being moved.
class FreeCoordinateWriteError : public Error {
public:
    using Error::Error;
};

class NotFullCycleError : public Error {
public:
    using Error::Error;
};

// The face-wise numbering disagrees with the tree's own increment function.
// Reaching this means the implementation is broken, never the input.
class DecompositionMismatchError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ResourceLimitError : public Error {
public:
    ResourceLimitError(std::uint64_t explored, std::string state)
        : Error("search node budget exceeded after " + std::to_string(explored) +
                " nodes (" + state + ")"),
          nodes_explored(explored), progress(std::move(state)) {}

    std::uint64_t nodes_explored;
    std::string progress;
};

} // namespace bitprobe
