#pragma once

#include <stdexcept>
#include <string>

namespace vps {

// Typed failure conditions surfaced by the library.  Every throwing
// operation documents which kinds it can raise.
enum class ErrorKind {
    SyntaxError,
    UnknownVariable,
    FieldMismatch,
    DimensionMismatch,
    DegenerateForm,
    DegeneratePoints,
    NotDirectSum,
    NoDecomposition,
    ZeroForm,
    ZeroVector,
    NotApolar,
    NotInChart,
    NotAssociative,
    NotLocal,
    NotUnique,
    IrrationalSpectrum,
    CayleySingular,
    UnsupportedN,
    ResourceBound,
    NotOnVariety,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegenerateForm: return "DegenerateForm";
        case ErrorKind::DegeneratePoints: return "DegeneratePoints";
        case ErrorKind::NotDirectSum: return "NotDirectSum";
        case ErrorKind::NoDecomposition: return "NoDecomposition";
        case ErrorKind::ZeroForm: return "ZeroForm";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::NotApolar: return "NotApolar";
        case ErrorKind::NotInChart: return "NotInChart";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::NotLocal: return "NotLocal";
        case ErrorKind::NotUnique: return "NotUnique";
        case ErrorKind::IrrationalSpectrum: return "IrrationalSpectrum";
        case ErrorKind::CayleySingular: return "CayleySingular";
        case ErrorKind::UnsupportedN: return "UnsupportedN";
        case ErrorKind::ResourceBound: return "ResourceBound";
        case ErrorKind::NotOnVariety: return "NotOnVariety";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace vps
