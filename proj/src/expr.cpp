#include "schurkit/expr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace schurkit {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    bool warned = false;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw domain_error("syntax error at position " + std::to_string(pos) + ": " +
                           what);
    }

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip();
        return pos >= text.size();
    }

    char peek() {
        skip();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string read_integer() {
        skip();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos) fail("expected a number");
        return text.substr(start, pos - start);
    }

    Rat read_rational() {
        std::string num = read_integer();
        skip();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::string den = read_integer();
            return rat_from_string(num + "/" + den);
        }
        return rat_from_string(num);
    }

    Partition read_partition() {
        skip();
        if (pos >= text.size() || (text[pos] != '[' && text[pos] != '('))
            fail("expected '[' to open a partition");
        char close = text[pos] == '[' ? ']' : ')';
        ++pos;
        std::vector<int> parts;
        skip();
        if (pos < text.size() && text[pos] == close) {
            ++pos;
        } else {
            while (true) {
                parts.push_back(std::stoi(read_integer()));
                skip();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == close) {
                    ++pos;
                    break;
                }
                fail("expected ',' or closing bracket in partition");
            }
        }
        bool sorted = true;
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) sorted = false;
        bool has_zero = false;
        for (int p : parts)
            if (p == 0) has_zero = true;
        if (!sorted || has_zero) warned = true;
        return Partition(std::move(parts));
    }

    // term := [rational '*'?]? basis partition | rational
    struct Term {
        Rat coeff;
        std::optional<Basis> basis;
        Partition partition;
    };

    Term read_term() {
        Term t{Rat(1), std::nullopt, Partition()};
        skip();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            t.coeff = read_rational();
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
            if (pos >= text.size() || std::isalpha(static_cast<unsigned char>(text[pos])) == 0)
                return t;  // bare constant
        }
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected a basis letter");
        char letter = text[pos];
        Basis b;
        try {
            b = basis_from_letter(letter);
        } catch (const domain_error&) {
            fail(std::string("unknown basis letter '") + letter + "'");
        }
        ++pos;
        t.basis = b;
        t.partition = read_partition();
        return t;
    }

    SymFunc parse() {
        std::vector<std::pair<Rat, Term>> signed_terms;
        skip();
        if (at_end()) fail("empty expression");
        bool first = true;
        while (!at_end()) {
            Rat sign(1);
            char c = peek();
            if (c == '+' || c == '-') {
                if (c == '-') sign = -1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            Term t = read_term();
            signed_terms.push_back({sign, std::move(t)});
            first = false;
        }
        // Uniform basis stays; mixed bases (or pure constants) land in Schur.
        std::optional<Basis> common;
        bool mixed = false;
        for (const auto& [sign, t] : signed_terms) {
            if (!t.basis) continue;
            if (!common)
                common = t.basis;
            else if (*common != *t.basis)
                mixed = true;
        }
        Basis out_basis = (!mixed && common) ? *common : Basis::Schur;
        SymFunc out(out_basis);
        for (const auto& [sign, t] : signed_terms) {
            Basis b = t.basis.value_or(out_basis);
            SymFunc piece = SymFunc::element(b, t.partition, sign * t.coeff);
            out += convert(piece, out_basis);
        }
        return out;
    }
};

void append_coeff(std::ostringstream& os, const Rat& c, bool lead, bool bare) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (!lead)
        os << (c < 0 ? " - " : " + ");
    else if (c < 0)
        os << "-";
    if (a != 1 || bare) {
        os << rat_to_string(a);
        if (!bare) os << "*";
    }
}

}  // namespace

SymFunc parse_expression(const std::string& text, bool* warn) {
    Parser p(text);
    SymFunc f = p.parse();
    if (warn) *warn = p.warned;
    return f;
}

std::string to_string(const SymFunc& f) {
    if (f.zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [p, c] : f.terms()) {
        bool bare = p.empty();
        append_coeff(os, c, lead, bare);
        if (!bare) os << basis_letter(f.basis()) << to_string(p);
        lead = false;
    }
    return os.str();
}

std::string to_string(const TensorExp& t) {
    if (t.zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [key, c] : t.terms()) {
        append_coeff(os, c, lead, false);
        for (size_t i = 0; i < key.size(); ++i) {
            if (i) os << " (x) ";
            os << basis_letter(t.slot_bases()[i]) << to_string(key[i]);
        }
        lead = false;
    }
    return os.str();
}

std::string to_universal_string(const SymFunc& f, bool symplectic) {
    SymFunc fs = convert(f, Basis::Schur);
    if (fs.zero()) return "0";
    const char open = symplectic ? '<' : '[';
    const char close = symplectic ? '>' : ']';
    std::ostringstream os;
    bool lead = true;
    for (const auto& [p, c] : fs.terms()) {
        append_coeff(os, c, lead, false);
        os << open;
        if (p.empty()) {
            os << '0';
        } else {
            for (int i = 0; i < p.length(); ++i) {
                if (i) os << ',';
                os << p.row(i);
            }
        }
        os << close;
        lead = false;
    }
    return os.str();
}

}  // namespace schurkit
