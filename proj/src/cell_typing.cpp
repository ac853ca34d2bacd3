#include "hookbound/cell_typing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hookbound/degree.hpp"
#include "hookbound/errors.hpp"

namespace hookbound {

namespace {

void require_consistent(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError("cell typing: " + what);
}

bool outside_square(const Cell& c, int side) { return c.row > side || c.col > side; }

int check_hypotheses(const Partition& lambda, const Rational& alpha, int delta) {
    const int n = lambda.size();
    if (alpha <= Rational(1)) throw HypothesisError("alpha > 1 fails: alpha = " + alpha.to_string());
    if (Rational(delta) < Rational(9) * alpha) {
        throw HypothesisError("delta >= 9 alpha fails: delta = " + std::to_string(delta) +
                              " < " + (Rational(9) * alpha).to_string());
    }
    const Rational cap = Rational(n) / alpha;
    if (Rational(lambda.part(1)) > cap) {
        throw HypothesisError("lambda_1 <= n/alpha fails: " + std::to_string(lambda.part(1)) + " > " +
                              cap.to_string());
    }
    if (Rational(lambda.column(1)) > cap) {
        throw HypothesisError("lambda'_1 <= n/alpha fails: " + std::to_string(lambda.column(1)) +
                              " > " + cap.to_string());
    }
    for (int i = 1; i < delta; ++i) {
        if (lambda.part(i) <= lambda.part(i + 1)) {
            throw HypothesisError("lambda_1 > ... > lambda_delta fails at row " + std::to_string(i + 1));
        }
    }
    if (lambda.part(delta) <= delta) {
        throw HypothesisError("lambda_delta > delta fails: lambda_" + std::to_string(delta) + " = " +
                              std::to_string(lambda.part(delta)));
    }
    // largest tau with lambda'_1 > ... > lambda'_{tau+1} >= delta
    if (lambda.column(1) < delta) throw HypothesisError("lambda'_1 >= delta fails");
    int tau = 0;
    while (tau < delta && lambda.column(tau + 2) < lambda.column(tau + 1) &&
           lambda.column(tau + 2) >= delta) {
        ++tau;
    }
    return tau;
}

}  // namespace

long rho(int delta, const Rational& alpha) {
    const long d2 = static_cast<long>(delta) * delta;
    if (alpha.is_integer()) return d2;
    const BigInt value = (Rational(d2) / alpha.fractional_part()).floor() + 1;
    if (!value.fits_slong_p()) throw DomainError("rho does not fit a machine integer");
    return value.get_si();
}

CellTyping cell_typing(const Partition& lambda, const Rational& alpha) {
    const int n = lambda.size();
    CellTyping out;
    out.shape = lambda;
    out.alpha = alpha;
    out.delta = diagonal(lambda);
    out.tau = check_hypotheses(lambda, alpha, out.delta);
    out.rho = rho(out.delta, alpha);
    const int delta = out.delta;

    long next_number = 1;
    auto assign = [&](const Cell& c, int type, int color) {
        out.cells.push_back(TypedCell{c, type, color, next_number++, hook_length(lambda, c)});
    };

    // type 1
    Partition current = lambda;
    while (true) {
        const auto corners = corner_cells(current);
        if (Rational(static_cast<long>(corners.size())) < Rational(2) * alpha) break;
        ++out.r;
        out.s_rounds.push_back(static_cast<int>(corners.size()));
        for (const auto& c : corners) assign(c, 1, out.r);
        current = remove_cells(current, {corners.begin(), corners.end()});
    }
    require_consistent(!out.s_rounds.empty() && out.s_rounds.front() >= delta, "s_1 < delta");

    // type 2
    while (true) {
        std::vector<Cell> corners;
        for (const auto& c : corner_cells(current)) {
            if (outside_square(c, delta)) corners.push_back(c);
        }
        if (corners.empty() || Rational(static_cast<long>(corners.size())) < alpha) break;
        ++out.q;
        out.t_rounds.push_back(static_cast<int>(corners.size()));
        for (const auto& c : corners) assign(c, 2, out.r + out.q);
        current = remove_cells(current, {corners.begin(), corners.end()});
    }

    // type 3: shells of mu outside the (delta + rho) square
    const Partition& mu = current;
    const long side = static_cast<long>(delta) + out.rho;
    const long outer = std::max(mu.part(1), mu.column(1));
    for (long m = outer; m > side; --m) {
        const int mi = static_cast<int>(m);
        for (int j = 1; j <= std::min(mu.part(mi), mi); ++j) assign({mi, j}, 3, mi);
        for (int i = 1; i < std::min(mu.column(mi) + 1, mi); ++i) assign({i, mi}, 3, mi);
    }

    // type 4
    std::vector<Cell> remaining;
    for (const auto& c : mu.cells()) {
        if (c.row <= side && c.col <= side) remaining.push_back(c);
    }
    for (const auto& c : remaining) assign(c, 4, 0);

    require_consistent(next_number == n + 1, "numbering does not cover 1..n");
    std::set<Cell> seen;
    for (const auto& tc : out.cells) {
        require_consistent(seen.insert(tc.cell).second, "cell numbered twice: " + to_string(tc.cell));
        ++out.type_counts[static_cast<std::size_t>(tc.type - 1)];
    }
    require_consistent(static_cast<long>(seen.size()) == n, "numbering misses cells");

    out.hook_product_low = 1;
    out.hook_product_type4 = 1;
    for (const auto& tc : out.cells) {
        if (tc.type == 4) {
            out.hook_product_type4 *= tc.hook;
            continue;
        }
        out.hook_product_low *= tc.hook;
        if (alpha * Rational(tc.hook) > Rational(tc.number)) {
            out.eq1_violations.push_back(tc.number);
            require_consistent(tc.type == 1 && tc.color == 1 && Rational(tc.number) < alpha,
                               "alpha h_N <= N fails at N = " + std::to_string(tc.number) +
                                   " (type " + std::to_string(tc.type) + ")");
        }
    }

    const long t1 = out.type_counts[0];
    const long t4 = out.type_counts[3];
    require_consistent(Rational(t1) >= Rational(2) * alpha * Rational(out.r) + alpha * Rational(delta),
                       "|T1| >= 2 alpha r + alpha delta fails");
    require_consistent(Rational(t4) <= Rational(static_cast<long>(delta) * delta) + alpha * Rational(out.rho),
                       "|T4| <= delta^2 + alpha rho fails");
    require_consistent(out.hook_product_type4 <= falling_factorial(n, static_cast<int>(t4)),
                       "type-4 hook product exceeds n (n-1) ... (n-|T4|+1)");
    const Comparison aggregate = compare_at_least(
        factorial(n - static_cast<int>(t4)),
        PowerBound{alpha, Rational(n - t4), Rational(out.hook_product_low, 1)});
    require_consistent(aggregate.verdict != Verdict::Fail,
                       "(n-|T4|)! / prod h >= alpha^(n-|T4|) fails");
    return out;
}

BoundCertificate strict_bound(const Partition& lambda, const Rational& alpha) {
    const CellTyping typing = cell_typing(lambda, alpha);
    const int n = lambda.size();
    const long t4 = typing.type_counts[3];
    const BigInt f = degree(lambda);

    BoundCertificate cert;
    cert.bound_name = "strict";
    cert.add_parameter("alpha", alpha);
    cert.add_parameter("delta", static_cast<long>(typing.delta));
    cert.add_parameter("rho", typing.rho);
    cert.add_parameter("T4", t4);
    cert.add_parameter("n", static_cast<long>(n));
    cert.exponent = Rational(n) - (Rational(static_cast<long>(typing.delta) * typing.delta) +
                                   alpha * Rational(typing.rho));
    cert.set_comparison(compare_at_least(f, PowerBound{alpha, cert.exponent, 1}));
    cert.details["partition"] = lambda.to_string();
    cert.details["tau"] = typing.tau;
    cert.details["r"] = typing.r;
    cert.details["q"] = typing.q;
    cert.details["type_counts"] = typing.type_counts;
    cert.details["eq1_violations"] = typing.eq1_violations;

    BoundCertificate sharp;
    sharp.bound_name = "strict-sharp";
    sharp.exponent = Rational(n - t4);
    sharp.set_comparison(compare_at_least(f, PowerBound{alpha, sharp.exponent, 1}));
    cert.checks.push_back(std::move(sharp));

    BoundCertificate numbered;
    numbered.bound_name = "numbered-product";
    numbered.exponent = Rational(n - t4);
    numbered.set_comparison(compare_at_least(
        factorial(n - static_cast<int>(t4)),
        PowerBound{alpha, numbered.exponent, Rational(typing.hook_product_low, 1)}));
    cert.checks.push_back(std::move(numbered));
    return cert;
}

Json to_json(const CellTyping& typing) {
    Json j;
    j["partition"] = typing.shape.to_string();
    j["alpha"] = typing.alpha.to_string();
    j["delta"] = typing.delta;
    j["rho"] = typing.rho;
    j["tau"] = typing.tau;
    j["r"] = typing.r;
    j["q"] = typing.q;
    j["s_rounds"] = typing.s_rounds;
    j["t_rounds"] = typing.t_rounds;
    j["type_counts"] = typing.type_counts;
    j["eq1_violations"] = typing.eq1_violations;
    Json cells = Json::array();
    for (const auto& tc : typing.cells) {
        cells.push_back(Json::array({tc.cell.row, tc.cell.col, tc.type, tc.color, tc.number, tc.hook}));
    }
    j["cells"] = cells;
    return j;
}

std::string verify_typing_record(const Json& j) {
    try {
        const Partition shape = Partition::parse(j.at("partition").get<std::string>());
        const Rational alpha = Rational::parse(j.at("alpha").get<std::string>());
        const int n = shape.size();
        const int delta = j.at("delta").get<int>();
        const long rho_value = j.at("rho").get<long>();
        const int r = j.at("r").get<int>();
        if (delta != diagonal(shape)) return "delta does not match the shape";
        if (rho_value != rho(delta, alpha)) return "rho does not match delta and alpha";

        std::set<Cell> seen;
        std::set<long> numbers;
        std::array<long, 4> counts{};
        BigInt product4 = 1;
        int last_type = 1;
        long last_number = 0;
        for (const auto& row : j.at("cells")) {
            const Cell c{row.at(0).get<int>(), row.at(1).get<int>()};
            const int type = row.at(2).get<int>();
            const int color = row.at(3).get<int>();
            const long number = row.at(4).get<long>();
            const int h = row.at(5).get<int>();
            if (!shape.contains_cell(c)) return "cell " + to_string(c) + " outside the shape";
            if (h != hook_length(shape, c)) return "hook mismatch at " + to_string(c);
            if (type < 1 || type > 4) return "bad type";
            if (type < last_type) return "types out of order";
            if (number <= last_number) return "numbers out of order";
            last_type = type;
            last_number = number;
            if (!seen.insert(c).second) return "duplicate cell";
            numbers.insert(number);
            ++counts[static_cast<std::size_t>(type - 1)];
            if (type == 4) {
                product4 *= h;
            } else if (alpha * Rational(h) > Rational(number)) {
                if (!(type == 1 && color == 1 && Rational(number) < alpha)) {
                    return "alpha h_N <= N fails at N = " + std::to_string(number);
                }
            }
        }
        if (static_cast<long>(seen.size()) != n) return "cells do not cover the shape";
        if (numbers.size() != seen.size() || *numbers.begin() != 1 || *numbers.rbegin() != n) {
            return "numbers are not 1..n";
        }
        if (Rational(counts[0]) < Rational(2) * alpha * Rational(r) + alpha * Rational(delta)) {
            return "|T1| bound fails";
        }
        if (Rational(counts[3]) > Rational(static_cast<long>(delta) * delta) + alpha * Rational(rho_value)) {
            return "|T4| bound fails";
        }
        if (product4 > falling_factorial(n, static_cast<int>(counts[3]))) return "type-4 product fails";
        for (std::size_t t = 0; t < 4; ++t) {
            if (j.at("type_counts").at(t).get<long>() != counts[t]) return "type_counts mismatch";
        }
    } catch (const nlohmann::json::exception& e) {
        return std::string("malformed typing record: ") + e.what();
    } catch (const Error& e) {
        return std::string("malformed typing record: ") + e.what();
    }
    return {};
}

}  // namespace hookbound
