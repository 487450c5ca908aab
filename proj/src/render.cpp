#include "horochow/render.hpp"

#include <array>

namespace horochow::render {

namespace {

const std::array<const char*, 10> kSup = {"⁰", "¹", "²", "³", "⁴",
                                          "⁵", "⁶", "⁷", "⁸", "⁹"};

/// Unsigned rendering of a term whose coefficient has been made positive.
std::string magnitude(const ComboTerm& t, const std::string& unit_id) {
    std::string qpart;
    if (t.q_power == 1)
        qpart = "q";
    else if (t.q_power >= 2)
        qpart = "q" + sup(t.q_power);
    const std::string vpart = (t.vertex == unit_id) ? "" : vertex(t.vertex);
    if (qpart.empty() && vpart.empty()) return t.coeff.str();

    std::string cs;
    if (!(t.coeff == Rat(1)))
        cs = t.coeff.str() + (t.coeff.is_integer() ? "" : "·");
    if (!qpart.empty()) {
        std::string s = cs + qpart;
        if (!vpart.empty()) s += "·" + vpart;
        return s;
    }
    return cs + vpart;
}

}  // namespace

std::string sup(int k) {
    if (k < 0) return "⁻" + sup(-k);
    std::string digits = std::to_string(k);
    std::string out;
    for (char d : digits) out += kSup[d - '0'];
    return out;
}

std::string vertex(const std::string& id) {
    if (id.empty()) return id;
    if (id[0] == 's') return "σ" + id.substr(1);
    if (id[0] == 't') return "τ" + id.substr(1);
    return id;
}

std::string term(const ComboTerm& t, const std::string& unit_id) {
    if (t.coeff.sign() < 0) {
        ComboTerm pos = t;
        pos.coeff = -t.coeff;
        return "-" + magnitude(pos, unit_id);
    }
    return magnitude(t, unit_id);
}

std::string terms(const std::vector<ComboTerm>& ts, const std::string& unit_id) {
    std::string out;
    bool first = true;
    for (const auto& t : ts) {
        if (t.coeff.is_zero()) continue;
        ComboTerm pos = t;
        bool neg = t.coeff.sign() < 0;
        if (neg) pos.coeff = -t.coeff;
        if (first) {
            out += (neg ? "-" : "") + magnitude(pos, unit_id);
            first = false;
        } else {
            out += (neg ? " - " : " + ") + magnitude(pos, unit_id);
        }
    }
    return out.empty() ? "0" : out;
}

std::string combo(const VertexCombo& c, const std::string& unit_id) {
    return terms(to_terms(c), unit_id);
}

std::string poly(const SymPoly& p, const std::vector<std::string>& names, bool unicode) {
    std::string base = p.str(names);
    if (!unicode) return base;
    std::string out;
    for (std::size_t i = 0; i < base.size();) {
        char ch = base[i];
        if (ch == '*') {
            out += "·";
            ++i;
        } else if (ch == '^') {
            std::size_t j = i + 1;
            while (j < base.size() && std::isdigit(static_cast<unsigned char>(base[j]))) ++j;
            if (j > i + 1) {
                out += sup(std::stoi(base.substr(i + 1, j - i - 1)));
                i = j;
            } else {
                out += ch;
                ++i;
            }
        } else {
            out += ch;
            ++i;
        }
    }
    return out;
}

namespace {

/// Shared rendering for partition-indexed class combinations.
template <typename TermsMap>
std::string indexed_terms(const TermsMap& terms, const char* symbol, bool dot_coeff) {
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Rat& c = it->second;
        if (c.is_zero()) continue;
        Rat mag = c;
        bool neg = c.sign() < 0;
        if (neg) mag = -c;
        std::string cs;
        if (!(mag == Rat(1))) cs = mag.str() + ((dot_coeff || !mag.is_integer()) ? "·" : "");
        std::string body = cs + symbol + "[" + it->first.str() + "]";
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string schubert(const schubert::SchubertCycle& c) {
    return indexed_terms(c.terms(), "σ", false);
}

std::string spinor(const schubert::SpinorCycle& c) {
    return indexed_terms(c.terms(), "γ", true);
}

std::string to_ascii(const std::string& text) {
    struct Sub {
        const char* from;
        const char* to;
    };
    static const Sub kSubs[] = {
        {"·", "*"}, {"σ", "s"}, {"τ", "t"}, {"γ", "g"}, {"′", "'"}, {"⁻", "^-"},
    };
    std::string out;
    for (std::size_t i = 0; i < text.size();) {
        // Runs of superscript digits collapse to a single ^exponent.
        std::string digits;
        std::size_t j = i;
        while (j < text.size()) {
            bool matched = false;
            for (int d = 0; d <= 9; ++d) {
                std::size_t len = std::string(kSup[d]).size();
                if (text.compare(j, len, kSup[d]) == 0) {
                    digits += static_cast<char>('0' + d);
                    j += len;
                    matched = true;
                    break;
                }
            }
            if (!matched) break;
        }
        if (!digits.empty()) {
            out += "^" + digits;
            i = j;
            continue;
        }
        bool replaced = false;
        for (const auto& s : kSubs) {
            std::size_t len = std::string(s.from).size();
            if (text.compare(i, len, s.from) == 0) {
                out += s.to;
                i += len;
                replaced = true;
                break;
            }
        }
        if (!replaced) {
            out += text[i];
            ++i;
        }
    }
    return out;
}

}  // namespace horochow::render
