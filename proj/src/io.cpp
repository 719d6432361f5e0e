#include "ffdisc/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ffdisc {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what);
    }
    std::uint64_t uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected an integer");
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > (1ull << 40)) fail("integer overflow");
            ++i;
        }
        return v;
    }
};

// poly over F_p in the variable 'u', evaluated to a packed element index
std::uint32_t parse_bracket_coeff(const Field& F, Cursor& c) {
    // assumes '[' consumed; reads until ']'
    std::uint32_t acc = 0;  // packed
    for (;;) {
        std::uint32_t coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = static_cast<std::uint32_t>(c.uint() % F.p());
            have_coef = true;
        }
        std::uint32_t expo = 0;
        if (c.peek() == 'u') {
            c.eat('u');
            expo = 1;
            if (c.eat('^')) expo = static_cast<std::uint32_t>(c.uint());
        } else if (!have_coef) {
            c.fail("expected coefficient or 'u'");
        }
        if (expo >= F.k()) c.fail("u-exponent exceeds the extension degree");
        std::uint32_t term = coef;
        for (std::uint32_t j = 0; j < expo; ++j) term *= F.p();  // coef * p^expo, packed monomial
        acc = F.add(acc, term);
        if (c.eat('+')) continue;
        if (c.eat(']')) return acc;
        c.fail("expected '+' or ']' in extension coefficient");
    }
}

// base-grammar polynomial; stops at any character outside the grammar
Poly parse_poly_base(const Field& F, Cursor& c) {
    std::vector<std::uint32_t> coeffs;
    auto add_term = [&](std::uint32_t coef, std::uint64_t expo) {
        if (expo > 4096) c.fail("exponent too large");
        if (coeffs.size() <= expo) coeffs.resize(static_cast<std::size_t>(expo) + 1, 0);
        coeffs[static_cast<std::size_t>(expo)] = F.add(coeffs[static_cast<std::size_t>(expo)], coef);
    };
    bool first = true;
    for (;;) {
        std::uint32_t coef;
        bool have_coef = false;
        if (c.eat('[')) {
            coef = parse_bracket_coeff(F, c);
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = static_cast<std::uint32_t>(c.uint() % F.p());
            have_coef = true;
        } else {
            coef = 1;
        }
        if (have_coef) c.eat('*');
        if (c.peek() == 't') {
            c.eat('t');
            std::uint64_t expo = 1;
            if (c.eat('^')) expo = c.uint();
            add_term(coef, expo);
        } else if (have_coef) {
            add_term(coef, 0);
        } else if (first) {
            c.fail("expected a term");
        } else {
            c.fail("dangling '+'");
        }
        first = false;
        // '+' continues the sum; '*' only continues when it is a coefficient
        // product, which was already consumed above
        std::size_t save = c.i;
        if (c.eat('+')) {
            // a following '(' belongs to the expression grammar, not here
            if (c.peek() == '(') {
                c.i = save;
                break;
            }
            continue;
        }
        break;
    }
    Poly g{std::move(coeffs)};
    g.trim();
    return g;
}

Poly parse_comma_form(const Field& F, const std::string& text) {
    Poly g;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const unsigned long v = std::stoul(tok);
        if (v >= F.q()) throw std::invalid_argument("coefficient index out of range: " + tok);
        g.c.push_back(static_cast<std::uint32_t>(v));
    }
    g.trim();
    return g;
}

Poly parse_expr(const Field& F, Cursor& c);

Poly parse_atom(const Field& F, Cursor& c) {
    if (c.eat('(')) {
        Poly inner = parse_expr(F, c);
        if (!c.eat(')')) c.fail("expected ')'");
        return inner;
    }
    return parse_poly_base(F, c);
}

Poly parse_factor(const Field& F, Cursor& c) {
    Poly a = parse_atom(F, c);
    while (c.peek() == '^') {
        c.eat('^');
        a = poly_pow(F, a, c.uint());
    }
    return a;
}

Poly parse_expr(const Field& F, Cursor& c) {
    Poly a = parse_factor(F, c);
    for (;;) {
        if (c.peek() == '(') {  // implicit product
            a = poly_mul(F, a, parse_factor(F, c));
            continue;
        }
        if (c.peek() == '*') {
            const std::size_t save = c.i;
            c.eat('*');
            if (c.peek() == '(') {
                a = poly_mul(F, a, parse_factor(F, c));
                continue;
            }
            c.i = save;
            break;
        }
        if (c.peek() == '+') {  // sum at expression level: poly + (expr)...
            const std::size_t save = c.i;
            c.eat('+');
            if (c.peek() == '(') {
                a = poly_add(F, a, parse_factor(F, c));
                continue;
            }
            c.i = save;
            break;
        }
        break;
    }
    return a;
}

bool looks_like_comma_form(const std::string& text) {
    bool has_comma = false;
    for (char ch : text) {
        if (ch == ',') has_comma = true;
        if (ch == 't' || ch == '(' || ch == '[' || ch == ':') return false;
    }
    return has_comma;
}

// split "a=b,c=d" style lists at depth 0 of (), {}, []
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '{' || ch == '[') ++depth;
        if (ch == ')' || ch == '}' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Poly parse_poly(const Field& F, const std::string& text) {
    const std::string t = strip(text);
    if (t.empty()) throw std::invalid_argument("empty polynomial literal");
    if (t == "0") return poly_zero();
    if (looks_like_comma_form(t)) return parse_comma_form(F, t);
    Cursor c{t};
    Poly g = parse_poly_base(F, c);
    if (!c.done()) c.fail("trailing input after polynomial");
    return g;
}

Poly parse_poly_expr(const Field& F, const std::string& text) {
    const std::string t = strip(text);
    if (t.empty()) throw std::invalid_argument("empty polynomial literal");
    if (t == "0") return poly_zero();
    if (looks_like_comma_form(t)) return parse_comma_form(F, t);
    Cursor c{t};
    Poly g = parse_expr(F, c);
    if (!c.done()) c.fail("trailing input after polynomial expression");
    return g;
}

std::string print_poly(const Field& F, const Poly& g) {
    if (g.is_zero()) return "0";
    std::string out;
    auto coeff_str = [&](std::uint32_t v) -> std::string {
        if (F.k() == 1 || v < F.p()) return std::to_string(v);
        // packed extension element as [..u..]
        std::string s = "[";
        bool first = true;
        std::uint32_t x = v;
        std::vector<std::uint32_t> digits;
        while (x) {
            digits.push_back(x % F.p());
            x /= F.p();
        }
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (digits[j] == 0) continue;
            if (!first) s += "+";
            first = false;
            if (j == 0 || digits[j] != 1) s += std::to_string(digits[j]);
            if (j >= 1) s += "u";
            if (j >= 2) s += "^" + std::to_string(j);
        }
        return s + "]";
    };
    for (int i = deg(g); i >= 0; --i) {
        const std::uint32_t v = g.coeff(static_cast<std::size_t>(i));
        if (v == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += coeff_str(v);
            continue;
        }
        if (v != 1) out += coeff_str(v);
        out += "t";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

RootOfUnity parse_root_of_unity(const std::string& text) {
    const std::string t = strip(text);
    const std::size_t slash = t.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("root of unity literal must be a/m");
    const long long a = std::stoll(t.substr(0, slash));
    const long long m = std::stoll(t.substr(slash + 1));
    return RootOfUnity::make(a, m);
}

std::vector<std::pair<Poly, Phase>> parse_twists(const Field& F, const std::string& text) {
    std::vector<std::pair<Poly, Phase>> out;
    for (const std::string& item : split_top(strip(text), ',')) {
        const std::string it = strip(item);
        if (it.empty()) continue;
        const std::size_t colon = it.rfind(':');
        if (colon == std::string::npos) throw std::invalid_argument("twist entry must be P:a/m");
        out.emplace_back(parse_poly_expr(F, it.substr(0, colon)),
                         Phase::of(parse_root_of_unity(it.substr(colon + 1))));
    }
    return out;
}

namespace {

std::vector<std::uint32_t> parse_tuple(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw std::invalid_argument("exponent tuple must be (c1,c2,...)");
    t = t.substr(1, t.size() - 2);
    std::vector<std::uint32_t> out;
    if (strip(t).empty()) return out;
    for (const std::string& item : split_top(t, ','))
        out.push_back(static_cast<std::uint32_t>(std::stoul(strip(item))));
    return out;
}

}  // namespace

ModifiedChar parse_modchar(const Field& F, const std::string& text) {
    std::string t = strip(text);
    const std::string prefix = "modchar{";
    if (t.rfind(prefix, 0) != 0 || t.back() != '}')
        throw std::invalid_argument("modchar literal must be modchar{...}");
    t = t.substr(prefix.size(), t.size() - prefix.size() - 1);
    std::string qs, Qs, chis, twists;
    for (const std::string& item : split_top(t, ',')) {
        const std::string it = strip(item);
        const std::size_t eq = it.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("modchar: expected key=value");
        const std::string key = strip(it.substr(0, eq));
        const std::string val = strip(it.substr(eq + 1));
        if (key == "q") qs = val;
        else if (key == "Q") Qs = val;
        else if (key == "chi") chis = val;
        else if (key == "twist") twists = val;
        else throw std::invalid_argument("modchar: unknown key " + key);
    }
    if (!qs.empty() && std::stoul(qs) != F.q())
        throw std::invalid_argument("modchar: field size mismatch");
    const Poly Q = parse_poly_expr(F, Qs);
    const std::vector<std::uint32_t> expo = parse_tuple(chis);
    auto G = unit_group(F, Q);
    const DirichletChar chi(G, expo);
    if (twists.size() < 2 || twists.front() != '{' || twists.back() != '}')
        throw std::invalid_argument("modchar: twist must be {...}");
    auto tw = parse_twists(F, twists.substr(1, twists.size() - 2));
    return ModifiedChar::from_mod_q(F, chi, std::move(tw));
}

std::string print_modchar(const Field& F, const ModifiedChar& mc) {
    std::string out = "modchar{q=" + std::to_string(F.q()) + ",Q=" + print_poly(F, mc.Q) + ",chi=(";
    const auto& expo = mc.chi.exponents();
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(expo[i]);
    }
    out += "),twist={";
    for (std::size_t i = 0; i < mc.twists.size(); ++i) {
        if (i) out += ",";
        out += print_poly(F, mc.twists[i].first) + ":";
        const Phase& ph = mc.twists[i].second;
        if (ph.exact()) {
            out += ph.root().str();
        } else {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", ph.rotation());
            out += buf;
        }
    }
    return out + "}}";
}

std::string print_char_id(const Field& F, const DirichletChar& chi) {
    std::string out = "(" + print_poly(F, chi.modulus()) + ", (";
    const auto& expo = chi.exponents();
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(expo[i]);
    }
    return out + "))";
}

std::string print_short_char_id(const ShortIntervalChar& xi) {
    std::string out = "(" + std::to_string(xi.nu()) + ", (";
    const auto& expo = xi.exponents();
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(expo[i]);
    }
    return out + "))";
}

Field RunConfig::make_field() const {
    const ElementOrder ord =
        element_order == "generator" ? ElementOrder::generator : ElementOrder::natural;
    if (k == 1) return Field::prime(p, ord);
    std::vector<std::uint32_t> mod;
    if (!ext_modulus.empty()) {
        // literal over F_p in u: reuse the bracket parser by wrapping
        const Field Fp = Field::prime(p);
        std::string wrapped = ext_modulus;
        for (char& ch : wrapped)
            if (ch == 'u') ch = 't';
        const Poly m = parse_poly(Fp, wrapped);
        mod = m.c;
    }
    return Field::extension(p, k, mod, ord);
}

void RunConfig::validate() const {
    if (max_enum == 0 || node_limit == 0) throw std::invalid_argument("config: budgets must be positive");
    if (tolerance < 1e-12 || tolerance > 1e-6)
        throw std::invalid_argument("config: tolerance must lie in [1e-12, 1e-6]");
    if (element_order != "natural" && element_order != "generator")
        throw std::invalid_argument("config: element_order must be natural or generator");
    if (format != "csv" && format != "json") throw std::invalid_argument("config: format must be csv or json");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const std::string t = strip(line);
        if (t.empty() || t[0] == '#' || t[0] == '[') continue;  // sections are cosmetic
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config: expected key=value: " + t);
        const std::string key = strip(t.substr(0, eq));
        const std::string val = strip(t.substr(eq + 1));
        if (key == "p") cfg.p = static_cast<std::uint32_t>(std::stoul(val));
        else if (key == "k") cfg.k = static_cast<std::uint32_t>(std::stoul(val));
        else if (key == "ext_modulus") cfg.ext_modulus = val;
        else if (key == "element_order") cfg.element_order = val;
        else if (key == "max_enum") cfg.max_enum = std::stoull(val);
        else if (key == "node_limit") cfg.node_limit = std::stoull(val);
        else if (key == "tolerance") cfg.tolerance = std::stod(val);
        else if (key == "cache_dir") cfg.cache_dir = val;
        else if (key == "format") cfg.format = val;
        else if (key == "seed") cfg.seed = std::stoull(val);
        else throw std::invalid_argument("config: unknown key " + key);
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string effective_cache_dir(const RunConfig& cfg) {
    if (const char* env = std::getenv("FFDISC_CACHE")) return env;
    return cfg.cache_dir;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ += ",";
        out_ += header[i];
    }
    out_ += "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::invalid_argument("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ += ",";
        out_ += cells[i];
    }
    out_ += "\n";
}

std::string CsvWriter::num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string CsvWriter::num(std::int64_t x) { return std::to_string(x); }

}  // namespace ffdisc
