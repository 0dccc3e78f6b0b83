#include "secproj/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace secproj {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InputError("expected integer at position " + std::to_string(pos) +
                                           " in \"" + s + "\"");
        return s.substr(start, pos - start);
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (pos == start) throw InputError("expected variable at position " + std::to_string(pos) +
                                           " in \"" + s + "\"");
        return s.substr(start, pos - start);
    }
};

// factor := integer [ '/' integer ] | name [ '^' integer ]
// term   := factor ( '*' factor )*
void parse_term(Lexer& lx, const RingPtr& ring, bool negative, std::vector<Term>& out) {
    Scalar coef = Scalar::from_int(negative ? -1 : 1, ring->field);
    Monomial mono = Monomial::one();
    bool any = false;
    for (;;) {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(lx.integer());
            mpz_class den(1);
            if (lx.accept('/')) den = mpz_class(lx.integer());
            coef *= Scalar::from_fraction(num, den, ring->field);
            any = true;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string v = lx.name();
            int idx = ring->var_index(v);
            if (idx < 0) throw InputError("unknown variable \"" + v + "\"");
            long e = 1;
            if (lx.accept('^')) e = std::stol(lx.integer());
            if (e < 0) throw InputError("negative exponent");
            mono.e[idx] += static_cast<uint16_t>(e);
            mono.degree += static_cast<uint32_t>(e);
            any = true;
        } else {
            break;
        }
        if (!lx.accept('*')) break;
    }
    if (!any) throw InputError("empty term in polynomial");
    out.push_back({mono, coef});
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, MonomialOrder order) {
    Lexer lx{text};
    std::vector<Term> terms;
    bool negative = false;
    if (lx.accept('-'))
        negative = true;
    else
        lx.accept('+');
    if (lx.done()) throw InputError("empty polynomial text");
    parse_term(lx, ring, negative, terms);
    while (!lx.done()) {
        if (lx.accept('+'))
            negative = false;
        else if (lx.accept('-'))
            negative = true;
        else
            throw InputError("unexpected character '" + std::string(1, lx.peek()) + "' in \"" +
                             text + "\"");
        parse_term(lx, ring, negative, terms);
    }
    return Polynomial::from_terms(ring, std::move(terms), order);
}

std::vector<std::string> parse_variable_spec(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots != std::string::npos && spec.find(',') == std::string::npos) {
        std::string first = spec.substr(0, dots);
        std::string last = spec.substr(dots + 2);
        auto split = [](const std::string& v) -> std::pair<std::string, long> {
            size_t i = v.size();
            while (i > 0 && std::isdigit(static_cast<unsigned char>(v[i - 1]))) --i;
            if (i == 0 || i == v.size()) throw InputError("bad range variable \"" + v + "\"");
            return {v.substr(0, i), std::stol(v.substr(i))};
        };
        auto [p1, lo] = split(first);
        auto [p2, hi] = split(last);
        if (p1 != p2 || hi < lo) throw InputError("bad variable range \"" + spec + "\"");
        std::vector<std::string> names;
        for (long i = lo; i <= hi; ++i) names.push_back(p1 + std::to_string(i));
        return names;
    }
    std::vector<std::string> names;
    std::string cur;
    for (char c : spec + ",") {
        if (c == ',') {
            // trim
            size_t a = cur.find_first_not_of(" \t");
            size_t b = cur.find_last_not_of(" \t");
            if (a != std::string::npos) names.push_back(cur.substr(a, b - a + 1));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (names.empty()) throw InputError("empty variable list");
    return names;
}

IdealFile read_ideal_stream(std::istream& in) {
    std::string line;
    std::string ring_spec, field_spec;
    std::vector<std::string> poly_lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.rfind("ring:", 0) == 0)
            ring_spec = line.substr(5);
        else if (line.rfind("field:", 0) == 0)
            field_spec = line.substr(6);
        else
            poly_lines.push_back(line);
    }
    if (ring_spec.empty()) throw InputError("ideal file missing 'ring:' header");
    if (field_spec.empty()) throw InputError("ideal file missing 'field:' header");
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    IdealFile f;
    f.ring = PolynomialRing::make(parse_variable_spec(trim(ring_spec)), Field::parse(trim(field_spec)));
    for (const auto& pl : poly_lines) f.polys.push_back(parse_polynomial(pl, f.ring));
    return f;
}

IdealFile read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_ideal_stream(in);
}

void write_ideal_stream(std::ostream& out, const RingPtr& ring,
                        const std::vector<Polynomial>& polys) {
    bool contiguous = ring->names[0].size() >= 2 && ring->names[0].back() == '0';
    std::string prefix =
        contiguous ? ring->names[0].substr(0, ring->names[0].size() - 1) : std::string();
    for (int i = 0; contiguous && i < ring->nvars; ++i)
        if (ring->names[i] != prefix + std::to_string(i)) contiguous = false;
    if (contiguous && ring->nvars > 1) {
        out << "ring: " << prefix << "0.." << prefix << ring->nvars - 1 << "\n";
    } else {
        out << "ring: ";
        for (int i = 0; i < ring->nvars; ++i) out << (i ? "," : "") << ring->names[i];
        out << "\n";
    }
    out << "field: " << ring->field.str() << "\n";
    for (const auto& p : polys) out << p.str() << "\n";
}

void write_ideal_file(const std::string& path, const RingPtr& ring,
                      const std::vector<Polynomial>& polys) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    write_ideal_stream(out, ring, polys);
}

}  // namespace secproj
