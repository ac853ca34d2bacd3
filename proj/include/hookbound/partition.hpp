#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hookbound {

/// A cell (row, col) of a Young diagram, 1-based.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

/// Integer partition / Young diagram. Parts are weakly decreasing and
/// strictly positive; trailing zeros are dropped on construction.
/// part(i) for i past the last row reads as 0.
class Partition {
public:
    Partition() = default;
    /// Throws DomainError if the parts are negative or not weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Comma-separated parts, "" for the empty partition.
    static Partition parse(std::string_view text);
    /// b repeated a times.
    static Partition rectangle(int rows, int cols);

    std::span<const int> parts() const { return parts_; }
    int size() const { return total_; }          // n
    int length() const { return static_cast<int>(parts_.size()); }  // number of rows
    bool empty() const { return parts_.empty(); }

    /// lambda_i, 1-based; 0 past the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    /// lambda'_j, the length of column j; 0 past the first row.
    int column(int j) const;

    bool contains_cell(const Cell& c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
    }
    /// Cells in row-major order.
    std::vector<Cell> cells() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

Partition conjugate(const Partition& lambda);

/// h_ij = (lambda_i - j) + (lambda'_j - i) + 1. Throws DomainError if c is not in lambda.
int hook_length(const Partition& lambda, const Cell& c);

/// Side of the largest square contained in the diagram.
int diagonal(const Partition& lambda);

/// lambda in H(k, l), i.e. lambda_{k+1} <= l.
bool in_hook_class(const Partition& lambda, int k, int l);

/// Cells with hook number 1, by increasing row.
std::vector<Cell> corner_cells(const Partition& lambda);

/// Removes a set of cells, each of which must be a removable corner of the
/// diagram left by the others. Throws DomainError otherwise.
Partition remove_cells(const Partition& lambda, const std::set<Cell>& cells);

/// mu_i <= lambda_i for every i.
bool contains(const Partition& mu, const Partition& lambda);

}  // namespace hookbound
