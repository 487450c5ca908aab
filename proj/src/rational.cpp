#include "horochow/rational.hpp"

#include <cctype>
#include <ostream>

namespace horochow {

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    bool saw_digit = false;
    bool saw_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            saw_digit = true;
        } else if (c == '/' && !saw_slash && saw_digit) {
            saw_slash = true;
            saw_digit = false;  // require digits after the slash too
        } else {
            throw Error("malformed rational literal: " + text);
        }
    }
    if (!saw_digit) throw Error("malformed rational literal: " + text);
    mpq_class q(text[0] == '+' ? text.substr(1) : text);
    if (saw_slash && q.get_den() == 0) throw Error("rational with zero denominator");
    q.canonicalize();
    Rat r;
    r.v_ = q;
    return r;
}

long Rat::to_long() const {
    if (!is_integer()) throw Error("rational is not an integer: " + str());
    if (!v_.get_num().fits_slong_p()) throw Error("integer out of machine range");
    return v_.get_num().get_si();
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, int exp) {
    if (exp < 0) throw Error("negative exponent");
    Rat result(1);
    Rat b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace horochow
