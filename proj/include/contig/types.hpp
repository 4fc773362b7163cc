// Basic vertex-set machinery and the error types shared by all modules.
//
// A simplex is a nonempty set of vertex indices packed into a 64-bit mask,
// so complexes are capped at 64 vertices.  Everything downstream (contiguity
// checks, cover search) relies on set operations on these masks being O(1).

#ifndef CONTIG_TYPES_HPP
#define CONTIG_TYPES_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace contig {

using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline constexpr Mask vertex_bit(int v) { return Mask{1} << v; }

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline int lowest_vertex(Mask m) { return std::countr_zero(m); }

// Ascending vertex indices of a mask.
inline std::vector<int> mask_vertices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of(std::initializer_list<int> vs) {
    Mask m = 0;
    for (int v : vs) m |= vertex_bit(v);
    return m;
}

enum class ErrorCode {
    EmptyFacet,
    EmptyComplex,
    UnknownVertex,
    NotSimplicial,
    MissingVertex,
    DomainMismatch,
    NotASubcomplex,
    IndexOutOfRange,
    VertexBudgetExceeded,
    EnumerationBudgetExceeded,
    NeighborBudgetExceeded,
    ParseError,
};

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::EmptyFacet: return "EmptyFacet";
        case ErrorCode::EmptyComplex: return "EmptyComplex";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotSimplicial: return "NotSimplicial";
        case ErrorCode::MissingVertex: return "MissingVertex";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::NotASubcomplex: return "NotASubcomplex";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::VertexBudgetExceeded: return "VertexBudgetExceeded";
        case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case ErrorCode::NeighborBudgetExceeded: return "NeighborBudgetExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

// Thrown by build_map and the parsers when a vertex assignment maps some
// face to a non-face; carries the offending face as a witness.
struct NotSimplicialError : Error {
    std::vector<std::string> witness;  // labels of the failing face
    NotSimplicialError(std::vector<std::string> w, const std::string& what)
        : Error(ErrorCode::NotSimplicial, what), witness(std::move(w)) {}
};

struct ParseError : Error {
    int line;
    ParseError(int ln, const std::string& what) : Error(ErrorCode::ParseError, what), line(ln) {}
};

}  // namespace contig

#endif
