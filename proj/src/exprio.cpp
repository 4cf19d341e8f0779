#include "dpb/exprio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

namespace dpb {

namespace {

// Internal parse failure carrying a raw offset; converted to a ParseError
// with line/column information at the API boundary.
struct RawError {
    std::string msg;
    std::size_t pos;
};

std::pair<int, int> line_col(std::string_view text, std::size_t pos) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char peek2() const { return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0'; }
    void advance() { ++pos_; }
    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw RawError{msg, pos_}; }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t p) const {
        throw RawError{msg, p};
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

constexpr std::uint32_t kMaxExponent = 1000000;

// Unsigned decimal literal bounded by `limit`.
unsigned long parse_nat(Cursor& c, unsigned long limit, const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail(std::string("expected ") + what);
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        unsigned long digit = static_cast<unsigned long>(c.peek() - '0');
        if (v > (limit - digit) / 10) c.fail(std::string(what) + " too large");
        v = v * 10 + digit;
        c.advance();
    }
    return v;
}

struct ScalarToken {
    Coeff value;
    bool plain_one = false;   // written exactly "1"
    bool plain_zero = false;  // written exactly "0"
};

ScalarToken parse_scalar(Cursor& c, const CoeffRing& ring) {
    std::size_t start = c.pos();
    bool explicit_sign = false;
    bool negative = false;
    if (c.peek() == '+' || c.peek() == '-') {
        explicit_sign = true;
        negative = c.peek() == '-';
        c.advance();
        c.skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a number");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        digits += c.peek();
        c.advance();
    }
    mpz_class num(digits, 10);  // explicit base: default base 0 reads "09" as bad octal
    if (negative) num = -num;

    ScalarToken tok{Coeff::zero(ring)};
    if (c.peek() == '/') {
        if (!ring.is_rationals())
            c.fail_at("scalar with '/' is not in the declared ring " + ring.name(), start);
        c.advance();
        if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected denominator");
        std::string den;
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            den += c.peek();
            c.advance();
        }
        mpz_class d(den, 10);
        if (d == 0) c.fail_at("zero denominator", start);
        tok.value = Coeff::from_rational(ring, mpq_class(num, d));
        return tok;
    }
    if (c.peek() == 'm') {
        c.advance();
        unsigned long m = parse_nat(c, ~0ul / 16, "modulus");
        if (!ring.is_integers_mod() || ring.modulus() != m)
            c.fail_at("scalar literal for Zmod:" + std::to_string(m) +
                          " is not in the declared ring " + ring.name(),
                      start);
        tok.value = Coeff::from_integer(ring, num);
        return tok;
    }
    tok.value = Coeff::from_integer(ring, num);
    tok.plain_one = !explicit_sign && digits == "1";
    tok.plain_zero = !explicit_sign && digits == "0";
    return tok;
}

// mono := var ('^' nat)? ('*' var ('^' nat)?)*, accumulated into `slot`.
void parse_mono(Cursor& c, const AlgebraSig& sig, Monomial& slot) {
    while (true) {
        if (c.peek() != 't') c.fail("expected a generator 't<i>'");
        c.advance();
        std::size_t idx_pos = c.pos();
        unsigned long idx = parse_nat(c, kMaxExponent, "generator index");
        if (idx < 1 || static_cast<int>(idx) > sig.num_gens)
            c.fail_at("generator index " + std::to_string(idx) + " out of range 1.." +
                          std::to_string(sig.num_gens),
                      idx_pos);
        std::uint32_t exp = 1;
        c.skip_ws();
        if (c.peek() == '^') {
            c.advance();
            c.skip_ws();
            exp = static_cast<std::uint32_t>(parse_nat(c, kMaxExponent, "exponent"));
            c.skip_ws();
        }
        int i = static_cast<int>(idx);
        if (slot.exp(i) > kMaxExponent) c.fail("exponent too large");
        slot.set_exp(i, slot.exp(i) + exp);
        if (c.peek() == '*') {
            c.advance();
            c.skip_ws();
            continue;
        }
        break;
    }
}

// factor := '1' | mono
void parse_factor(Cursor& c, const AlgebraSig& sig, Monomial& slot) {
    c.skip_ws();
    if (c.peek() == '1' && !std::isdigit(static_cast<unsigned char>(c.peek2()))) {
        c.advance();
        return;  // unit factor
    }
    parse_mono(c, sig, slot);
}

// term := [scalar '*']? factor ('#' factor)*
// Returns the term as a polynomial (zero for a "0" term).
TensorPoly parse_term(Cursor& c, const AlgebraSig& sig, int arity) {
    c.skip_ws();
    Coeff coeff = Coeff::one(sig.ring);
    bool zero_term = false;
    TensorMonomial mono(arity, sig.num_gens);
    int filled = 0;

    char p = c.peek();
    bool scalar_start = std::isdigit(static_cast<unsigned char>(p)) || p == '+' || p == '-';
    if (scalar_start) {
        std::size_t start = c.pos();
        ScalarToken tok = parse_scalar(c, sig.ring);
        c.skip_ws();
        if (c.peek() == '*') {
            coeff = tok.value;
            c.advance();
            c.skip_ws();
            parse_factor(c, sig, mono.slot(1));
            filled = 1;
        } else if (tok.plain_one) {
            filled = 1;  // the literal '1' is the unit factor
        } else if (tok.plain_zero) {
            zero_term = true;
            filled = 1;  // shape-checked like a unit factor
        } else {
            c.fail_at("expected '*' after coefficient", start);
        }
    } else {
        parse_factor(c, sig, mono.slot(1));
        filled = 1;
    }

    c.skip_ws();
    while (c.peek() == '#') {
        if (filled >= arity)
            c.fail("too many tensor slots (arity is " + std::to_string(arity) + ")");
        c.advance();
        ++filled;
        parse_factor(c, sig, mono.slot(filled));
        c.skip_ws();
    }
    // A bare "0" stands for the zero element of any arity.
    if (filled != arity && !(zero_term && filled == 1))
        c.fail("expected " + std::to_string(arity) + " tensor slots, found " +
               std::to_string(filled));

    TensorPoly term(sig, arity);
    if (!zero_term) term.add_term(mono, coeff);
    return term;
}

TensorPoly parse_poly_raw(std::string_view text, const AlgebraSig& sig, int arity) {
    Cursor c(text);
    c.skip_ws();
    if (c.at_end()) c.fail("empty expression");
    TensorPoly result(sig, arity);
    bool negative = false;
    if (c.peek() == '-') {
        negative = true;
        c.advance();
    } else if (c.peek() == '+') {
        c.advance();
    }
    while (true) {
        TensorPoly term = parse_term(c, sig, arity);
        result += negative ? -term : term;
        c.skip_ws();
        if (c.at_end()) break;
        if (c.peek() == '+') {
            negative = false;
        } else if (c.peek() == '-') {
            negative = true;
        } else {
            c.fail("expected '+' or '-'");
        }
        c.advance();
    }
    return result;
}

std::string monomial_str(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (int i = 1; i <= m.num_vars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(i);
        if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s;
}

}  // namespace

TensorPoly parse_tpoly(std::string_view text, const AlgebraSig& sig, int arity) {
    try {
        return parse_poly_raw(text, sig, arity);
    } catch (const RawError& e) {
        auto [line, col] = line_col(text, e.pos);
        throw ParseError(e.msg, line, col);
    }
}

std::string print_tpoly(const TensorPoly& p) {
    if (p.is_zero()) return "0";
    const CoeffRing& ring = p.sig().ring;
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool negative = !ring.is_integers_mod() && sgn(c.value()) < 0;
        Coeff mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (!mag.is_one()) out += mag.str() + "*";
        for (int k = 1; k <= m.arity(); ++k) {
            if (k > 1) out += "#";
            out += monomial_str(m.slot(k));
        }
    }
    return out;
}

namespace {

struct Statement {
    std::string text;
    int line;
    int col;  // 1-based column of the statement start
};

std::vector<Statement> split_statements(std::string_view text) {
    std::vector<Statement> out;
    int line_no = 1;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t eol = text.find('\n', i);
        std::string_view line =
            text.substr(i, (eol == std::string_view::npos ? text.size() : eol) - i);
        std::size_t comment = line.find("//");
        if (comment != std::string_view::npos) line = line.substr(0, comment);

        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t semi = line.find(';', start);
            std::size_t end = semi == std::string_view::npos ? line.size() : semi;
            std::string_view piece = line.substr(start, end - start);
            // Trim, tracking the column of the first kept character.
            std::size_t first = piece.find_first_not_of(" \t\r");
            if (first != std::string_view::npos) {
                std::size_t last = piece.find_last_not_of(" \t\r");
                out.push_back(Statement{std::string(piece.substr(first, last - first + 1)),
                                        line_no, static_cast<int>(start + first) + 1});
            }
            if (semi == std::string_view::npos) break;
            start = semi + 1;
        }
        if (eol == std::string_view::npos) break;
        i = eol + 1;
        ++line_no;
    }
    return out;
}

[[noreturn]] void fail_stmt(const Statement& s, const std::string& msg, std::size_t off = 0) {
    throw ParseError(msg, s.line, s.col + static_cast<int>(off));
}

// Splits "key = value"; returns (key, value, value offset within statement).
std::tuple<std::string, std::string, std::size_t> key_value(const Statement& s) {
    std::size_t eq = s.text.find('=');
    if (eq == std::string::npos) fail_stmt(s, "expected '=' in statement");
    std::string key = s.text.substr(0, eq);
    std::size_t key_end = key.find_last_not_of(" \t");
    key = key_end == std::string::npos ? "" : key.substr(0, key_end + 1);
    std::size_t val_start = s.text.find_first_not_of(" \t", eq + 1);
    if (val_start == std::string::npos) fail_stmt(s, "missing value after '='", eq);
    return {key, s.text.substr(val_start), val_start};
}

}  // namespace

GenTable parse_bracket_text(std::string_view text) {
    std::optional<CoeffRing> ring;
    std::optional<int> d, n;
    std::optional<GenTable> table;
    std::vector<char> assigned;

    for (const Statement& s : split_statements(text)) {
        auto [key, value, val_off] = key_value(s);
        if (key == "ring") {
            if (ring) fail_stmt(s, "duplicate header 'ring'");
            if (table) fail_stmt(s, "header after entries");
            try {
                ring = CoeffRing::parse(value);
            } catch (const std::invalid_argument& e) {
                fail_stmt(s, e.what(), val_off);
            }
        } else if (key == "d" || key == "n") {
            bool is_d = key == "d";
            if ((is_d ? d : n)) fail_stmt(s, "duplicate header '" + key + "'");
            if (table) fail_stmt(s, "header after entries");
            Cursor c(value);
            unsigned long v = 0;
            try {
                v = parse_nat(c, 1000000, is_d ? "generator count" : "arity");
                c.skip_ws();
                if (!c.at_end()) c.fail("trailing characters after number");
            } catch (const RawError& e) {
                fail_stmt(s, e.msg, val_off + e.pos);
            }
            if (v < 1) fail_stmt(s, "'" + key + "' must be at least 1", val_off);
            (is_d ? d : n) = static_cast<int>(v);
        } else if (key.size() >= 2 && key.substr(0, 2) == "bb") {
            if (!ring || !d || !n)
                fail_stmt(s, "entry before complete header (need ring, d and n)");
            if (!table) {
                AlgebraSig sig{*ring, *d};
                try {
                    table.emplace(sig, *n);
                } catch (const std::invalid_argument& e) {
                    fail_stmt(s, e.what());
                }
                assigned.assign(table->num_entries(), 0);
            }
            // Parse "bb(i1,..,in)".
            Cursor c(key);
            c.advance();
            c.advance();
            c.skip_ws();
            std::vector<int> tuple;
            try {
                if (c.peek() != '(') c.fail("expected '(' after 'bb'");
                c.advance();
                while (true) {
                    c.skip_ws();
                    unsigned long idx = parse_nat(c, 1000000, "generator index");
                    if (idx < 1 || static_cast<int>(idx) > *d)
                        c.fail("generator index " + std::to_string(idx) + " out of range 1.." +
                               std::to_string(*d));
                    tuple.push_back(static_cast<int>(idx));
                    c.skip_ws();
                    if (c.peek() == ',') {
                        c.advance();
                        continue;
                    }
                    if (c.peek() == ')') {
                        c.advance();
                        break;
                    }
                    c.fail("expected ',' or ')'");
                }
                c.skip_ws();
                if (!c.at_end()) c.fail("trailing characters after ')'");
            } catch (const RawError& e) {
                fail_stmt(s, e.msg, e.pos);
            }
            if (static_cast<int>(tuple.size()) != *n)
                fail_stmt(s, "entry tuple has " + std::to_string(tuple.size()) +
                                 " indices, arity is " + std::to_string(*n));
            std::size_t flat = 0;
            for (int v : tuple) flat = flat * static_cast<std::size_t>(*d) +
                                       static_cast<std::size_t>(v - 1);
            if (assigned[flat]) fail_stmt(s, "duplicate entry bb" + key.substr(2));
            assigned[flat] = 1;
            try {
                table->set(tuple, parse_poly_raw(value, AlgebraSig{*ring, *d}, *n));
            } catch (const RawError& e) {
                fail_stmt(s, e.msg, val_off + e.pos);
            }
        } else {
            fail_stmt(s, "unknown statement '" + key + "'");
        }
    }
    if (!ring || !d || !n) {
        throw ParseError("incomplete file: need 'ring', 'd' and 'n' headers", 1, 1);
    }
    if (!table) table.emplace(AlgebraSig{*ring, *d}, *n);
    return std::move(*table);
}

std::string print_bracket_text(const GenTable& table) {
    std::string out;
    out += "ring = " + table.sig().ring.name() + "\n";
    out += "d = " + std::to_string(table.num_gens()) + "\n";
    out += "n = " + std::to_string(table.arity()) + "\n";
    for (const auto& tuple : GenTable::all_tuples(table.num_gens(), table.arity())) {
        out += "bb(";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(tuple[i]);
        }
        out += ") = " + print_tpoly(table.at(tuple)) + "\n";
    }
    return out;
}

GenTable load_bracket_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bracket_text(ss.str());
}

void save_bracket_file(const GenTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << print_bracket_text(table);
}

}  // namespace dpb
