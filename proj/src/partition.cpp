#include "hookbound/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "hookbound/errors.hpp"

namespace hookbound {

std::string to_string(const Cell& cell) {
    return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw DomainError("partition parts must be weakly decreasing");
        }
        total_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                             : comma - pos);
        int value = 0;
        const auto* begin = token.data();
        const auto* end = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (token.empty() || ec != std::errc() || ptr != end || value < 0) {
            throw ParseError("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError("malformed partition '" + std::string(text) + "': " + e.what());
    }
}

Partition Partition::rectangle(int rows, int cols) {
    if (rows < 0 || cols < 0) throw DomainError("rectangle dimensions must be non-negative");
    if (rows == 0 || cols == 0) return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::column(int j) const {
    if (j < 1) return 0;
    // parts are decreasing, so the rows reaching column j form a prefix
    const auto it = std::partition_point(parts_.begin(), parts_.end(), [j](int p) { return p >= j; });
    return static_cast<int>(it - parts_.begin());
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (int i = 1; i <= length(); ++i) {
        for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
    }
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.part(1)));
    for (int j = 1; j <= lambda.part(1); ++j) cols[static_cast<std::size_t>(j - 1)] = lambda.column(j);
    return Partition(std::move(cols));
}

int hook_length(const Partition& lambda, const Cell& c) {
    if (!lambda.contains_cell(c)) {
        throw DomainError("cell " + to_string(c) + " is not in the diagram " + lambda.to_string());
    }
    const int arm = lambda.part(c.row) - c.col;
    const int leg = lambda.column(c.col) - c.row;
    return arm + leg + 1;
}

int diagonal(const Partition& lambda) {
    int d = 0;
    while (lambda.part(d + 1) >= d + 1) ++d;
    return d;
}

bool in_hook_class(const Partition& lambda, int k, int l) { return lambda.part(k + 1) <= l; }

std::vector<Cell> corner_cells(const Partition& lambda) {
    std::vector<Cell> out;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
    }
    return out;
}

Partition remove_cells(const Partition& lambda, const std::set<Cell>& cells) {
    // Removing a set S keeps a diagram iff S is a union of row-end segments
    // whose result is still weakly decreasing; equivalently, in each row the
    // removed cells are the last ones, and the remaining lengths decrease.
    std::map<int, std::vector<int>> by_row;
    for (const auto& c : cells) {
        if (!lambda.contains_cell(c)) {
            throw DomainError("cannot remove " + to_string(c) + ": not in " + lambda.to_string());
        }
        by_row[c.row].push_back(c.col);
    }
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    for (auto& [row, cols] : by_row) {
        std::sort(cols.begin(), cols.end());
        const int len = lambda.part(row);
        const int k = static_cast<int>(cols.size());
        if (cols.front() != len - k + 1) {
            throw DomainError("cannot remove cells of row " + std::to_string(row) +
                              ": they are not at the end of the row");
        }
        parts[static_cast<std::size_t>(row - 1)] = len - k;
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) {
            throw DomainError("removing the cells of " + lambda.to_string() +
                              " leaves a non-diagram: row " + std::to_string(i + 1) +
                              " is longer than row " + std::to_string(i));
        }
    }
    return Partition(std::move(parts));
}

bool contains(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 1; i <= mu.length(); ++i) {
        if (mu.part(i) > lambda.part(i)) return false;
    }
    return true;
}

}  // namespace hookbound
