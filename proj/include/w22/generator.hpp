#pragma once

#include <compare>
#include <cstdint>

namespace w22 {

// Basis generators of the Lie algebra W(2,2): L_n and W_n, n in Z.
// GenKind order (L before W) plus ascending index is the PBW total order,
// so Generator's default lexicographic comparison IS the normal-form order.
enum class GenKind : std::uint8_t { L = 0, W = 1 };

inline char kind_char(GenKind k) { return k == GenKind::L ? 'L' : 'W'; }

struct Generator {
    GenKind kind;
    std::int64_t index;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator gen_L(std::int64_t n) { return {GenKind::L, n}; }
inline Generator gen_W(std::int64_t n) { return {GenKind::W, n}; }

}  // namespace w22
