#include "horochow/unipoly.hpp"

namespace horochow {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::x_power(int k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = Rat(1);
    return UniPoly(std::move(c));
}

Rat UniPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rat(0);
}

Rat UniPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    return *this;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    if (c.is_zero()) return {};
    std::vector<Rat> out(coeffs_);
    for (auto& v : out) v *= c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * Rat(static_cast<int>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / leading());
}

UniPoly UniPoly::rem(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> r(coeffs_);
    const int dd = divisor.degree();
    while (static_cast<int>(r.size()) - 1 >= dd) {
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dd) break;
        const Rat f = r.back() / divisor.leading();
        const int shift = static_cast<int>(r.size()) - 1 - dd;
        for (int i = 0; i <= dd; ++i) r[shift + i] -= f * divisor.coeff(i);
        r.pop_back();
    }
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rat mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != Rat(1)) out += mag.str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace horochow
