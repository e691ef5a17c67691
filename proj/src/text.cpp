#include "barcode/text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace barcode {

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    int line;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    int col() const { return static_cast<int>(pos) + 1; }

    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, col());
    }

    long read_uint(const char* what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) fail(std::string(what) + " too large");
            ++pos;
        }
        return v;
    }
};

// Factors accumulated before the ambient variable count is known:
// (1-based variable index, exponent).
using RawTerm = std::vector<std::pair<int, int>>;

RawTerm parse_raw_term(Cursor& c) {
    RawTerm out;
    c.skip_ws();
    if (c.done()) c.fail("empty term");
    if (c.peek() == '1') {
        ++c.pos;
        c.skip_ws();
        if (!c.done()) c.fail("unexpected trailing input after constant term");
        return out;
    }
    for (;;) {
        c.skip_ws();
        if (c.done() || c.peek() != 'x') c.fail("expected a factor x<k> or x<k>^<e>");
        ++c.pos;
        long var = c.read_uint("variable index");
        if (var < 1) c.fail("variables are 1-indexed (x1, x2, ...)");
        int exp = 1;
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            exp = static_cast<int>(c.read_uint("exponent"));
        }
        out.emplace_back(static_cast<int>(var), exp);
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '*') c.fail("expected '*' between factors");
        ++c.pos;
    }
    return out;
}

Term materialize(const RawTerm& raw, int vars, int line) {
    Exponents e(static_cast<size_t>(vars), 0);
    for (auto [var, exp] : raw) {
        if (var > vars)
            throw ParseError("variable x" + std::to_string(var) +
                                 " exceeds the ambient count " + std::to_string(vars),
                             line);
        e[static_cast<size_t>(var - 1)] += exp;
    }
    return Term(std::move(e));
}

bool looks_like_vector(std::string_view s) {
    return s.find('x') == std::string_view::npos && s != "1";
}

std::vector<int> parse_vector_line(Cursor& c) {
    std::vector<int> out;
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        if (!std::isdigit(static_cast<unsigned char>(c.peek())))
            c.fail("expected a non-negative integer exponent");
        out.push_back(static_cast<int>(c.read_uint("exponent")));
    }
    if (out.empty()) c.fail("empty exponent vector");
    return out;
}

std::string_view strip(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Term parse_term(std::string_view text, int vars) {
    Cursor c{text, 0, 0};
    RawTerm raw = parse_raw_term(c);
    return materialize(raw, vars, 0);
}

TermSet parse_term_set(std::string_view text, std::optional<int> vars) {
    struct Item {
        int line;
        bool is_vector;
        RawTerm raw;
        std::vector<int> vec;
    };
    std::vector<Item> items;
    int inferred = vars.value_or(0);

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        Cursor c{line, 0, line_no};
        Item item{line_no, looks_like_vector(line), {}, {}};
        if (item.is_vector) {
            item.vec = parse_vector_line(c);
            inferred = std::max(inferred, static_cast<int>(item.vec.size()));
        } else {
            item.raw = parse_raw_term(c);
            for (auto [var, exp] : item.raw) inferred = std::max(inferred, var);
        }
        items.push_back(std::move(item));
    }

    if (items.empty()) throw ParseError("no terms in input");
    if (inferred == 0)
        throw ParseError("cannot infer the variable count from constants only; pass --vars");
    const int n = vars.value_or(inferred);

    std::vector<Term> terms;
    terms.reserve(items.size());
    for (const Item& item : items) {
        if (item.is_vector) {
            if (static_cast<int>(item.vec.size()) > n)
                throw ParseError("exponent vector has " + std::to_string(item.vec.size()) +
                                     " entries but the ambient count is " + std::to_string(n),
                                 item.line);
            Exponents e = item.vec;
            e.resize(static_cast<size_t>(n), 0);
            terms.emplace_back(std::move(e));
        } else {
            terms.push_back(materialize(item.raw, n, item.line));
        }
    }

    try {
        return TermSet(n, std::move(terms));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

VariableOrdering parse_ordering(std::string_view text, int vars) {
    std::string_view s = strip(text);
    if (s == "identity") return VariableOrdering::identity(vars);

    std::vector<int> rank_to_var;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t sep = s.find('<', pos);
        std::string_view tok = strip(s.substr(pos, sep == std::string_view::npos ? sep : sep - pos));
        pos = (sep == std::string_view::npos) ? s.size() + 1 : sep + 1;
        if (tok.empty() || tok[0] != 'x')
            throw ParseError("ordering must be 'identity' or a chain like x1<x3<x2");
        Cursor c{tok.substr(1), 0, 0};
        long var = c.read_uint("variable index");
        if (!c.done()) c.fail("unexpected trailing input in ordering entry");
        if (var < 1 || var > vars)
            throw ParseError("ordering mentions x" + std::to_string(var) +
                             " outside 1.." + std::to_string(vars));
        rank_to_var.push_back(static_cast<int>(var) - 1);
    }
    if (static_cast<int>(rank_to_var.size()) != vars)
        throw ParseError("ordering must mention each of the " + std::to_string(vars) +
                         " variables exactly once");
    try {
        return VariableOrdering::from_rank_list(std::move(rank_to_var));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string to_string(const Term& t) {
    std::string s;
    for (int v = 0; v < t.vars(); ++v) {
        int g = t.exponent(v);
        if (g == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (g > 1) s += "^" + std::to_string(g);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const VariableOrdering& ord) {
    std::string s;
    for (int r = 0; r < ord.vars(); ++r) {
        if (r) s += "<";
        s += var_name(ord.var_at_rank(r));
    }
    return s;
}

std::string to_string(Cmp c) {
    switch (c) {
        case Cmp::lt: return "LT";
        case Cmp::eq: return "EQ";
        case Cmp::gt: return "GT";
    }
    return "?";
}

std::string var_name(int var) {
    return "x" + std::to_string(var + 1);
}

}  // namespace barcode
