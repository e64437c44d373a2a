#include "rado/equations.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace rado {

LinearEquation::LinearEquation(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 2) throw std::invalid_argument("equation needs at least two variables");
    for (Int c : coeffs_)
        if (c == 0) throw std::invalid_argument("zero coefficient");
}

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at position " + std::to_string(pos) + ": " + what +
                         (pos < text.size() ? " near '" + text.substr(pos, 8) + "'" : ""));
    }
    Int digits() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected digits");
        Int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = checked_add(checked_mul(v, 10), text[pos] - '0');
            ++pos;
        }
        return v;
    }
};

}  // namespace

LinearEquation parse_equation(const std::string& text) {
    Scanner sc{text};
    std::map<Int, Int> by_index;  // variable index -> coefficient
    bool first = true;
    while (!sc.done()) {
        if (sc.peek() == '=') break;
        Int sign = 1;
        if (sc.peek() == '+' || sc.peek() == '-') {
            sign = (sc.peek() == '-') ? -1 : 1;
            ++sc.pos;
        } else if (!first) {
            sc.fail("expected '+' or '-' between terms");
        }
        Int coeff = 1;
        sc.skip_ws();
        if (sc.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[sc.pos])))
            coeff = sc.digits();
        sc.skip_ws();
        if (sc.pos >= text.size() || text[sc.pos] != 'x') sc.fail("expected variable 'x<index>'");
        ++sc.pos;
        Int index = sc.digits();
        if (index < 1) sc.fail("variable index must be >= 1");
        coeff = checked_mul(sign, coeff);
        if (coeff == 0) sc.fail("zero coefficient for x" + std::to_string(index));
        if (by_index.count(index)) sc.fail("repeated variable x" + std::to_string(index));
        by_index[index] = coeff;
        first = false;
    }
    if (!sc.done()) {
        if (sc.peek() != '=') sc.fail("unexpected trailing input");
        ++sc.pos;
        if (sc.done() || sc.digits() != 0) sc.fail("right-hand side must be 0");
        if (!sc.done()) sc.fail("unexpected trailing input");
    }
    if (by_index.empty()) throw ParseError("parse error: empty equation");
    std::vector<Int> coeffs;
    Int expect = 1;
    for (auto& [idx, c] : by_index) {
        if (idx != expect)
            throw ParseError("parse error: missing variable x" + std::to_string(expect));
        coeffs.push_back(c);
        ++expect;
    }
    if (coeffs.size() < 2) throw ParseError("parse error: equation needs at least two variables");
    return LinearEquation(std::move(coeffs));
}

std::string render_equation(const LinearEquation& eq) {
    std::string out;
    for (std::size_t i = 0; i < eq.arity(); ++i) {
        Int c = eq.at(i);
        if (c >= 0 && i > 0) out += '+';
        if (c == -1)
            out += '-';
        else if (c != 1)
            out += std::to_string(c);
        out += "x" + std::to_string(i + 1);
    }
    return out + "=0";
}

RadoVerdict is_rado(const LinearEquation& eq) {
    const auto& c = eq.coefficients();
    const std::size_t m = c.size();
    std::vector<std::size_t> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        Int sum = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i)) sum = checked_add(sum, c[i]);
        if (sum != 0) continue;
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i)) subset.push_back(i + 1);
        if (best.empty() || std::lexicographical_compare(subset.begin(), subset.end(),
                                                         best.begin(), best.end()))
            best = std::move(subset);
    }
    return {!best.empty(), std::move(best)};
}

std::pair<LinearEquation, Int> content_normalize(const LinearEquation& eq) {
    Int g = 0;
    for (Int c : eq.coefficients()) g = gcd_abs(g, c);
    std::vector<Int> out;
    for (Int c : eq.coefficients()) out.push_back(c / g);
    return {LinearEquation(std::move(out)), g};
}

}  // namespace rado
