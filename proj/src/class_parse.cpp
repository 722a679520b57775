#include "enriques/class_parse.hpp"

#include "enriques/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace enriques {
namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// Parses an optionally signed decimal integer of arbitrary size.
Int parse_integer(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_start)
        throw ParseClassError("expected an integer at position " + std::to_string(start) +
                              " in \"" + s + "\"");
    return Int(s.substr(start, i - start));
}

NumClass parse_coordinate_list(const std::string& s) {
    std::size_t i = 0;
    skip_ws(s, i);
    if (i >= s.size() || s[i] != '[')
        throw ParseClassError("expected '[' to start a coordinate list");
    ++i;
    NumClass v{};
    for (int slot = 0; slot < kRank; ++slot) {
        v[static_cast<std::size_t>(slot)] = parse_integer(s, i);
        skip_ws(s, i);
        if (slot + 1 < kRank) {
            if (i >= s.size() || s[i] != ',')
                throw ParseClassError("expected ',' after coordinate " + std::to_string(slot) +
                                      " (a class has " + std::to_string(kRank) + " coordinates)");
            ++i;
        }
    }
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ']')
        throw ParseClassError("expected ']' after " + std::to_string(kRank) + " coordinates");
    ++i;
    skip_ws(s, i);
    if (i != s.size())
        throw ParseClassError("unexpected trailing characters after coordinate list");
    return v;
}

int symbol_slot(const std::string& name) {
    static const std::map<std::string, int> table = {
        {"E1", slot_e1}, {"E2", slot_e1 + 1}, {"E3", slot_e1 + 2},
        {"E4", slot_e1 + 3}, {"E5", slot_e1 + 4}, {"E6", slot_e1 + 5},
        {"E7", slot_e7}, {"E9", slot_e9}, {"E10", slot_e10},
        {"E910", slot_e9_10}, {"E9_10", slot_e9_10},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw ParseClassError("unknown basis symbol \"" + name +
                              "\" (expected E1..E7, E9, E10, or E910)");
    return it->second;
}

NumClass parse_symbolic(const std::string& s) {
    NumClass v{};
    std::size_t i = 0;
    skip_ws(s, i);
    if (i == s.size()) throw ParseClassError("empty class expression");
    bool first = true;
    while (i < s.size()) {
        Int sign = 1;
        skip_ws(s, i);
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw ParseClassError("expected '+' or '-' between terms at position " +
                                  std::to_string(i));
        }
        skip_ws(s, i);
        Int coeff = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_integer(s, i);
            skip_ws(s, i);
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws(s, i);
            }
        }
        if (i >= s.size() || (s[i] != 'E' && s[i] != 'e'))
            throw ParseClassError("expected a basis symbol at position " + std::to_string(i) +
                                  " in \"" + s + "\"");
        std::size_t name_start = i;
        ++i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        std::string name = s.substr(name_start, i - name_start);
        name[0] = 'E';
        v[static_cast<std::size_t>(symbol_slot(name))] += sign * coeff;
        skip_ws(s, i);
        first = false;
    }
    return v;
}

std::vector<Int> parse_csv_integers(const std::string& s, std::size_t expected,
                                    const char* what) {
    std::vector<Int> out;
    std::size_t i = 0;
    while (true) {
        out.push_back(parse_integer(s, i));
        skip_ws(s, i);
        if (i == s.size()) break;
        if (s[i] != ',')
            throw ParseClassError(std::string("expected ',' in ") + what + " coordinates");
        ++i;
    }
    if (out.size() != expected)
        throw ParseClassError(std::string(what) + " expects " + std::to_string(expected) +
                              " comma-separated integers, got " + std::to_string(out.size()));
    return out;
}

} // namespace

NumClass parse_num_class(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '[') return parse_coordinate_list(text);
    return parse_symbolic(text);
}

RClass parse_r_class(const std::string& text) {
    auto v = parse_csv_integers(text, 2, "an R-class");
    return RClass{v[0], v[1]};
}

PClass parse_p_class(const std::string& text) {
    auto v = parse_csv_integers(text, 10, "a P-class");
    PClass p{};
    for (int k = 0; k < 10; ++k) p.v[k] = v[static_cast<std::size_t>(k)];
    return p;
}

std::string format_num_class(const NumClass& v) {
    std::ostringstream os;
    os << '[';
    for (int k = 0; k < kRank; ++k) {
        if (k) os << ',';
        os << v[static_cast<std::size_t>(k)];
    }
    os << ']';
    return os.str();
}

} // namespace enriques
