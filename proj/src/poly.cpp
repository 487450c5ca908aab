#include "horochow/poly.hpp"

#include <algorithm>
#include <numeric>

namespace horochow {

SymPoly SymPoly::constant(int nvars, Rat c) {
    SymPoly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

SymPoly SymPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw Error("variable index out of range");
    SymPoly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

SymPoly SymPoly::monomial(Expo e, Rat c) {
    SymPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Rat SymPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymPoly::add_term(const Expo& e, const Rat& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != nvars_) throw Error("exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (o.nvars_ != nvars_) throw Error("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (o.nvars_ != nvars_) throw Error("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SymPoly SymPoly::operator-() const {
    SymPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (o.nvars_ != nvars_) throw Error("polynomial arity mismatch");
    SymPoly out(nvars_);
    Expo sum(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

SymPoly SymPoly::pow(int k) const {
    if (k < 0) throw Error("negative exponent");
    SymPoly result = constant(nvars_, Rat(1));
    SymPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

int SymPoly::degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

int SymPoly::weighted_degree(const std::vector<int>& weights) const {
    if (static_cast<int>(weights.size()) != nvars_) throw Error("weight arity mismatch");
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int i = 0; i < nvars_; ++i) d += e[i] * weights[i];
        deg = std::max(deg, d);
    }
    return deg;
}

bool SymPoly::is_homogeneous(const std::vector<int>& weights, int* degree_out) const {
    if (static_cast<int>(weights.size()) != nvars_) throw Error("weight arity mismatch");
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int i = 0; i < nvars_; ++i) d += e[i] * weights[i];
        if (deg == -1) {
            deg = d;
        } else if (d != deg) {
            return false;
        }
    }
    if (degree_out) *degree_out = deg;
    return true;
}

bool SymPoly::is_symmetric() const {
    // Adjacent transpositions generate the full symmetric group.
    for (int i = 0; i + 1 < nvars_; ++i) {
        for (const auto& [e, c] : terms_) {
            Expo swapped = e;
            std::swap(swapped[i], swapped[i + 1]);
            if (coeff(swapped) != c) return false;
        }
    }
    return true;
}

SymPoly SymPoly::substitute(const std::vector<SymPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw Error("substitution arity mismatch");
    const int target_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target_vars) throw Error("substitution images disagree on arity");
    SymPoly out(target_vars);
    for (const auto& [e, c] : terms_) {
        SymPoly term = SymPoly::constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        out += term;
    }
    return out;
}

SymPoly SymPoly::select_and_drop(int var, int value) const {
    if (var < 0 || var >= nvars_) throw Error("variable index out of range");
    SymPoly out(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var] != value) continue;
        Expo reduced;
        reduced.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i)
            if (i != var) reduced.push_back(e[i]);
        out.add_term(reduced, c);
    }
    return out;
}

std::string SymPoly::str(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_) throw Error("name arity mismatch");
    if (terms_.empty()) return "0";
    // Iterate lex-descending so leading terms print first.
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c.sign() < 0;
        const Rat mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += mag.str();
        } else if (mag == Rat(1)) {
            out += vars;
        } else {
            out += mag.str() + "*" + vars;
        }
    }
    return out;
}

const SymPoly::Expo& lex_leading(const SymPoly& p) {
    if (p.is_zero()) throw Error("leading term of zero polynomial");
    return p.terms().rbegin()->first;
}

}  // namespace horochow
