#pragma once

#include <stdexcept>
#include <string>

namespace mssom {

// Base for all domain errors. CLI maps these to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingColumn : Error {
    explicit MissingColumn(const std::string& name)
        : Error("missing column: " + name) {}
};

struct EmptyFile : Error {
    explicit EmptyFile(const std::string& path)
        : Error("no usable rows in file: " + path) {}
};

struct LabelOutOfRange : Error {
    explicit LabelOutOfRange(const std::string& what) : Error(what) {}
};

struct ClassAbsent : Error {
    explicit ClassAbsent(const std::string& cls)
        : Error("no labeled rows for class " + cls) {}
};

struct EmptyData : Error {
    EmptyData() : Error("empty dataset") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) +
                ", got " + std::to_string(got)) {}
};

struct InvalidUnit : Error {
    explicit InvalidUnit(int unit)
        : Error("invalid unit id " + std::to_string(unit)) {}
};

struct NoLabeledData : Error {
    NoLabeledData() : Error("no labeled samples") {}
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace mssom
