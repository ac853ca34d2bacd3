#pragma once

#include <array>
#include <vector>

#include "hookbound/certificate.hpp"
#include "hookbound/partition.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

/// rho = delta^2 for integral alpha, floor(delta^2 / (alpha - floor(alpha))) + 1 otherwise.
long rho(int delta, const Rational& alpha);

struct TypedCell {
    Cell cell;
    int type = 0;    // 1..4
    int color = 0;   // peeling round for types 1-2, shell index for type 3, 0 for type 4
    long number = 0; // N, 1..n
    int hook = 0;    // h_N, the hook length of the cell in the original diagram
};

/// Result of numbering the cells of a diagram with distinct top rows.
///
/// Type 1: full corner-peeling rounds while the diagram has >= 2 alpha corners.
/// Type 2: rounds peeling only the corners outside the delta x delta square
///         while there are >= alpha of them.
/// Type 3: remaining cells outside the (delta+rho) square, shell by shell from
///         the outermost inwards; inside a shell the row segment comes first.
/// Type 4: everything else, taking the largest numbers in row-major order.
struct CellTyping {
    Partition shape;
    Rational alpha;
    int delta = 0;
    long rho = 0;
    int tau = 0;
    /// Sorted by number.
    std::vector<TypedCell> cells;
    std::array<long, 4> type_counts{};
    int r = 0;
    int q = 0;
    std::vector<int> s_rounds;
    std::vector<int> t_rounds;
    /// Numbers N of type 1-3 cells with alpha * h_N > N. The only cells where
    /// this can happen are first-round cells with N < alpha (a corner has
    /// h = 1, so N = 1 always violates it); any other violation is a
    /// ConsistencyError.
    std::vector<long> eq1_violations;
    /// prod over type 1-3 of h, and over type 4 of h.
    BigInt hook_product_low;
    BigInt hook_product_type4;
};

/// Requires delta >= 9 alpha, lambda_1, lambda'_1 <= n/alpha and
/// lambda_1 > ... > lambda_delta > delta (HypothesisError otherwise). Asserts
/// the counting claims of the construction and throws ConsistencyError on a
/// violation:
///   |T1| >= 2 alpha r + alpha delta,  |T4| <= delta^2 + alpha rho,
///   prod_{T4} h <= n (n-1) ... (n-|T4|+1),
///   (n-|T4|)! / prod_{T1..T3} h >= alpha^(n-|T4|).
CellTyping cell_typing(const Partition& lambda, const Rational& alpha);

/// f^lambda >= alpha^(n - (delta^2 + alpha rho)), with the sharper exponent
/// n - |T4| and the numbered product as required checks.
BoundCertificate strict_bound(const Partition& lambda, const Rational& alpha);

Json to_json(const CellTyping& typing);

/// Recomputes the invariants of a serialized typing from its cell array:
/// numbering is a bijection, types come in order, hooks match the shape, the
/// per-type bounds hold. Returns an empty string when everything holds.
std::string verify_typing_record(const Json& j);

}  // namespace hookbound
