#pragma once

#include <stdexcept>
#include <string>

namespace reebdeco {

// Process exit codes used by the CLI. Anything not listed maps to 1.
enum class errc : int {
    other = 1,
    schema = 2,
    disconnected = 3,
    capacity = 4,
    nonconvergence = 5,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error(errc::schema, what) {}
};

// Loops and duplicate edges violate the simple-graph contract.
struct NonSimpleError : Error {
    explicit NonSimpleError(const std::string& what) : Error(errc::schema, what) {}
};

struct DisconnectedError : Error {
    explicit DisconnectedError(const std::string& what, int components = 0)
        : Error(errc::disconnected, what), components(components) {}
    int components;
};

// Raised by the brute-force oracles when an instance exceeds the enumeration bound.
struct SizeError : Error {
    explicit SizeError(const std::string& what) : Error(errc::other, what) {}
};

struct CapacityError : Error {
    explicit CapacityError(const std::string& what) : Error(errc::capacity, what) {}
};

struct NonConvergenceError : Error {
    explicit NonConvergenceError(const std::string& what) : Error(errc::nonconvergence, what) {}
};

// Barcodes whose open-bar counts differ have no finite bottleneck matching.
struct InfiniteDistanceError : Error {
    explicit InfiniteDistanceError(const std::string& what) : Error(errc::other, what) {}
};

}  // namespace reebdeco
