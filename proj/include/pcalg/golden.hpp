#pragma once

// Golden reference data for the repro checks: the published involution
// matrices, characteristic/minimal polynomials, order tables and echelon
// forms that the engine must regenerate from scratch. Entries are polynomial
// strings in alpha, beta, gamma, psi.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pcalg::golden {

// 8x8 tau_a in the basis a, b, c, ab, bc, ac, a(bc), b(ac); row-major
inline const std::array<std::array<const char*, 8>, 8> kTauA = {{
    {"1", "8/3*alpha", "8/3*gamma", "4/3*alpha", "8/3*psi", "4/3*gamma", "4/3*psi",
     "8/3*alpha*gamma + beta - 2/3*psi"},
    {"0", "-1/3", "0", "-2/3", "0", "0", "0", "-1/3*gamma"},
    {"0", "0", "-1/3", "0", "0", "-2/3", "0", "alpha"},
    {"0", "-4/3", "0", "1/3", "0", "0", "0", "2/3*gamma"},
    {"0", "0", "0", "0", "-1/3", "0", "-2/3", "1/3"},
    {"0", "0", "-4/3", "0", "0", "1/3", "0", "-2*alpha"},
    {"0", "0", "0", "0", "-4/3", "0", "1/3", "-2/3"},
    {"0", "0", "0", "0", "0", "0", "0", "-1"},
}};

inline const std::array<std::array<const char*, 8>, 8> kTauB = {{
    {"-1/3", "0", "0", "-2/3", "0", "0", "-1/3*beta", "0"},
    {"8/3*alpha", "1", "8/3*beta", "4/3*alpha", "4/3*beta", "8/3*psi",
     "8/3*alpha*beta + gamma - 2/3*psi", "4/3*psi"},
    {"0", "0", "-1/3", "0", "-2/3", "0", "alpha", "0"},
    {"-4/3", "0", "0", "1/3", "0", "0", "2/3*beta", "0"},
    {"0", "0", "-4/3", "0", "1/3", "0", "-2*alpha", "0"},
    {"0", "0", "0", "0", "0", "-1/3", "1/3", "-2/3"},
    {"0", "0", "0", "0", "0", "0", "-1", "0"},
    {"0", "0", "0", "0", "0", "-4/3", "-2/3", "1/3"},
}};

// xi = 8/3*beta*gamma + 1/3*alpha - 2/3*psi appears in both of the last two
// columns of row 3
inline const std::array<std::array<const char*, 8>, 8> kTauC = {{
    {"-1/3", "0", "0", "-4/3*beta", "0", "-2/3", "-beta", "1/3*beta"},
    {"0", "-1/3", "0", "-4/3*gamma", "-2/3", "0", "1/3*gamma", "-gamma"},
    {"8/3*gamma", "8/3*beta", "1", "-4/3*alpha + 8/3*psi", "4/3*beta", "4/3*gamma",
     "8/3*beta*gamma + 1/3*alpha - 2/3*psi", "8/3*beta*gamma + 1/3*alpha - 2/3*psi"},
    {"0", "0", "0", "-1/3", "0", "0", "1/3", "1/3"},
    {"0", "-4/3", "0", "0", "1/3", "0", "-2*gamma", "2/3*gamma"},
    {"-4/3", "0", "0", "0", "0", "1/3", "2/3*beta", "-2*beta"},
    {"0", "0", "0", "4/3", "0", "0", "-1/3", "2/3"},
    {"0", "0", "0", "4/3", "0", "0", "2/3", "-1/3"},
}};

// entries of tau_c that the derivation is allowed to disagree with (reported,
// never patched): row 3, columns 7 and 8 (1-indexed)
inline const std::vector<std::pair<int, int>> kTauCUncertain = {{2, 6}, {2, 7}};

// 3x3 tau_a tau_b in the basis a, b, ab (2-generated subalgebra)
inline const std::array<std::array<const char*, 3>, 3> kTwoGenTauAB = {{
    {"64/9*alpha^2 - 16/9*alpha - 1/3", "8/3*alpha", "32/9*alpha^2 + 4/9*alpha - 2/3"},
    {"8/9 - 8/9*alpha", "-1/3", "-4/9*alpha - 2/9"},
    {"-32/9*alpha - 4/9", "-4/3", "-16/9*alpha + 1/9"},
}};

// 8x8 tau_a tau_b over the full parameter ring
inline const std::array<std::array<const char*, 8>, 8> kTauAB = {{
    {"64/9*alpha^2 - 16/9*alpha - 1/3", "8/3*alpha", "64/9*alpha*beta - 8/9*gamma - 32/9*psi",
     "32/9*alpha^2 + 4/9*alpha - 2/3", "32/9*alpha*beta - 16/9*gamma + 8/9*psi",
     "-32/9*alpha*gamma + 64/9*alpha*psi - 4/3*beta - 4/9*gamma + 8/9*psi",
     "64/9*alpha^2*beta + 8/9*alpha*beta + 32/9*alpha*gamma - 64/9*alpha*psi - beta + 4/9*gamma - "
     "8/9*psi",
     "8/9*alpha*gamma + 32/9*alpha*psi + 1/3*beta - 8/9*gamma - 2/9*psi"},
    {"-8/9*alpha + 8/9", "-1/3", "-8/9*beta", "-4/9*alpha - 2/9", "-4/9*beta",
     "4/9*gamma - 8/9*psi", "-8/9*alpha*beta - 4/9*beta - 1/9*gamma + 2/9*psi",
     "-1/9*gamma - 4/9*psi"},
    {"0", "0", "1/9", "0", "2/9", "-4/3*alpha + 2/9", "-alpha - 2/9", "1/3*alpha + 4/9"},
    {"-32/9*alpha - 4/9", "-4/3", "-32/9*beta", "-16/9*alpha + 1/9", "-16/9*beta",
     "-8/9*gamma - 32/9*psi", "-32/9*alpha*beta + 2/9*beta - 16/9*gamma + 8/9*psi",
     "2/9*gamma - 16/9*psi"},
    {"0", "0", "4/9", "0", "-1/9", "-4/9", "2/3*alpha + 4/9", "1/9"},
    {"0", "0", "4/9", "0", "8/9", "8/3*alpha - 1/9", "1/9", "-2/3*alpha - 2/9"},
    {"0", "0", "16/9", "0", "-4/9", "8/9", "8/3*alpha + 1/9", "-2/9"},
    {"0", "0", "0", "0", "0", "4/3", "2/3", "-1/3"},
}};

// degree-8 characteristic polynomial of tau_a tau_b, in Q[alpha] only;
// coefficients from x^0 to x^8, as published
inline const std::array<const char*, 9> kCharPolyTauAB = {
    "1",
    "-64/9*alpha^2 - 16/9*alpha - 8/9",
    "1024/27*alpha^3 - 64/9*alpha^2 - 32/9*alpha + 20/27",
    "-4096/81*alpha^4 - 2048/81*alpha^3 + 448/27*alpha^2 + 400/81*alpha - 136/81",
    "8192/81*alpha^4 - 2048/81*alpha^3 - 128/27*alpha^2 + 64/81*alpha - 154/81",
    "-4096/81*alpha^4 - 2048/81*alpha^3 + 448/27*alpha^2 + 400/81*alpha - 136/81",
    "1024/27*alpha^3 - 64/9*alpha^2 - 32/9*alpha + 20/27",
    "-64/9*alpha^2 - 16/9*alpha - 8/9",
    "1",
};

// the derived polynomial (two routes agree: Faddeev-LeVerrier and Bareiss).
// The published x^7 and x^1 coefficients are inconsistent with the published
// product matrix itself: its trace is 64/9 a^2 + 16/9 a - 8/9, and at a = 1/4
// the product is an involution whose trace must be an even integer, which
// forces the +8/9 constant below. Flagged indices: 7 and 1.
inline const std::array<const char*, 9> kCharPolyTauABDerived = {
    "1",
    "-64/9*alpha^2 - 16/9*alpha + 8/9",
    "1024/27*alpha^3 - 64/9*alpha^2 - 32/9*alpha + 20/27",
    "-4096/81*alpha^4 - 2048/81*alpha^3 + 448/27*alpha^2 + 400/81*alpha - 136/81",
    "8192/81*alpha^4 - 2048/81*alpha^3 - 128/27*alpha^2 + 64/81*alpha - 154/81",
    "-4096/81*alpha^4 - 2048/81*alpha^3 + 448/27*alpha^2 + 400/81*alpha - 136/81",
    "1024/27*alpha^3 - 64/9*alpha^2 - 32/9*alpha + 20/27",
    "-64/9*alpha^2 - 16/9*alpha + 8/9",
    "1",
};

inline const std::vector<int> kCharPolyFlagged = {7, 1};

// minimal polynomial of tau_a tau_b^{tau_c} at alpha=beta=gamma=-1/8, psi
// symbolic; coefficients from x^0 to x^5, as published
inline const std::array<const char*, 6> kMinPolyQuintic = {
    "-1",
    "-1024/81*psi^2 + 32/81*psi + 101/81",
    "-32768/729*psi^3 - 1024/243*psi^2 + 1120/243*psi + 404/729",
    "-32768/729*psi^3 - 1024/243*psi^2 + 1120/243*psi + 404/729",
    "-1024/81*psi^2 + 32/81*psi + 101/81",
    "1",
};

// derived version: anti-palindromic, so that x = 1 is a root identically in
// psi, exactly as the accompanying root list states. The published x^2 and
// x^1 coefficients carry the opposite sign; with them, evaluation at 1 gives
// 2(c1 + c2) != 0 and 1 would not be a root. Flagged indices: 2 and 1.
inline const std::array<const char*, 6> kMinPolyQuinticDerived = {
    "-1",
    "1024/81*psi^2 - 32/81*psi - 101/81",
    "32768/729*psi^3 + 1024/243*psi^2 - 1120/243*psi - 404/729",
    "-32768/729*psi^3 - 1024/243*psi^2 + 1120/243*psi + 404/729",
    "-1024/81*psi^2 + 32/81*psi + 101/81",
    "1",
};

inline const std::vector<int> kQuinticFlagged = {2, 1};

// (**) polynomials for k = 2 on the universal algebra:
// f1 = (tau_ab^2)_{1,1} - 1 and f2 = (tau_ab^2)_{1,2}
inline const char* kStarF1 =
    "4096/81*alpha^4 - 3072/81*alpha^3 - 576/81*alpha^2 + 464/81*alpha + 33/81 - 1";
inline const char* kStarF2 = "512/27*alpha^3 - 256/27*alpha^2 - 64/27*alpha + 24/27";

// fixed-point defect matrix: rows are 9*(tau_ab^2 x_i - x_i) at alpha = 1/4,
// beta/gamma/psi symbolic; rows 1, 2, 4 vanish
inline const std::array<std::array<const char*, 8>, 8> kDefectTimes9 = {{
    {"0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0"},
    {"-16/3*beta + 32/3*gamma - 64/3*psi", "32/3*beta - 16/3*gamma - 64/3*psi", "-16",
     "-64/3*beta - 64/3*gamma + 128/3*psi", "8", "8", "16", "16"},
    {"0", "0", "0", "0", "0", "0", "0", "0"},
    {"-20/3*beta - 32/3*gamma + 64/3*psi", "40/3*beta - 20/3*gamma - 8/3*psi", "1",
     "-8/3*beta + 64/3*gamma - 128/3*psi", "-14", "4", "8", "8"},
    {"-20/3*beta + 40/3*gamma - 8/3*psi", "-32/3*beta - 20/3*gamma + 64/3*psi", "1",
     "64/3*beta - 8/3*gamma - 128/3*psi", "4", "-14", "8", "8"},
    {"-16/3*beta - 4/3*gamma + 44/3*psi", "-4/3*beta + 38/3*gamma - 64/3*psi", "1/2",
     "44/3*beta - 64/3*gamma + 56/3*psi", "2", "2", "-14", "4"},
    {"38/3*beta - 4/3*gamma - 64/3*psi", "-4/3*beta - 16/3*gamma + 44/3*psi", "1/2",
     "-64/3*beta + 44/3*gamma + 56/3*psi", "2", "2", "4", "-14"},
}};

// row echelon form reached by the last four coordinate columns of the defect
// matrix (nonzero rows)
inline const std::array<std::array<long, 4>, 4> kDefectEchelon = {{
    {8, 8, 16, 16},
    {0, 18, 36, 36},
    {0, 0, 36, 36},
    {0, 0, 0, 18},
}};

// exhaustive 2-generated order tables over small prime fields: |tau_ab| per
// alpha = 0..p-1
inline const std::array<uint64_t, 7> kOrdersF7 = {4, 7, 2, 7, 4, 3, 3};
inline const std::array<uint64_t, 11> kOrdersF11 = {5, 11, 3, 2, 3, 11, 5, 5, 6, 6, 5};

// order -> set of 2-generated alpha values (as minimal polynomials over Q, in x)
struct OrderRow {
    int order;
    std::vector<const char*> minpolys;
};

inline const std::vector<OrderRow>& two_gen_order_rows() {
    static const std::vector<OrderRow> rows = {
        {2, {"x - 1/4"}},
        {3, {"x + 1/8", "x - 5/8"}},
        // 1/4 +- 3/(4 sqrt 2): square (x - 1/4)^2 = 9/32
        {4, {"x^2 - 1/2*x - 7/32"}},
        // 7/16 +- 3 sqrt5/16 and 1/16 +- 3 sqrt5/16
        {5, {"x^2 - 7/8*x + 1/64", "x^2 - 1/8*x - 11/64"}},
        // 1/4 +- 3 sqrt3 / 8
        {6, {"x^2 - 1/2*x - 23/64"}},
        {7, {"x^3 - 3/8*x^2 - 9/32*x + 13/512", "x^3 - 9/8*x^2 + 3/32*x + 43/512"}},
        // 1/8 (2 +- 3 sqrt(2 +- sqrt2)): ((8x-2)^2 - 18)^2 = 162
        {8, {"x^4 - x^3 - 3/16*x^2 + 7/32*x + 17/2048"}},
        {9, {"x^3 - 3/4*x^2 - 15/64*x + 19/512", "x^3 - 3/4*x^2 - 15/64*x + 73/512"}},
        // 1/16 (4 +- 3 sqrt(2(5 +- sqrt5))): ((16x-4)^2 - 90)^2 = 1620
        {10, {"x^4 - x^3 - 21/64*x^2 + 37/128*x + 241/4096"}},
        {11,
         {"x^5 - 7/8*x^4 - 5/16*x^3 + 127/512*x^2 + 119/4096*x - 263/32768",
          "x^5 - 13/8*x^4 + 7/16*x^3 + 145/512*x^2 - 337/4096*x - 197/32768"}},
        // 1/8 (2 +- 3 sqrt(2 +- sqrt3)): ((8x-2)^2 - 18)^2 = 243
        {12, {"x^4 - x^3 - 3/16*x^2 + 7/32*x - 47/4096"}},
    };
    return rows;
}

// psi values that bound |tau_a tau_b^{tau_c}| at alpha=beta=gamma=-1/8, as
// minimal polynomials; orders 3, 4, 5, 6
inline const std::vector<OrderRow>& conjugate_order_rows() {
    static const std::vector<OrderRow> rows = {
        {3, {"x - 5/32"}},
        {4, {"x + 1/8"}},
        // 1/64 - 9 sqrt5/64: (x - 1/64)^2 = 405/4096
        {5, {"x^2 - 1/32*x - 101/1024"}},
        {6, {"x + 13/32"}},
    };
    return rows;
}

}  // namespace pcalg::golden
