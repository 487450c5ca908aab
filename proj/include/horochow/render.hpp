#pragma once

#include <string>
#include <vector>

#include "horochow/hasse.hpp"
#include "horochow/poly.hpp"
#include "horochow/rational.hpp"
#include "horochow/schubert.hpp"

namespace horochow::render {

/// "⁰"…"⁹" composed for a nonnegative exponent.
std::string sup(int k);

/// Display form of a basis-class id: leading 's' becomes σ, 't' becomes τ.
std::string vertex(const std::string& id);

/// One term, e.g. "2σ4", "q·τ'5", "2q²", "-τ6+".  The unit vertex is
/// suppressed so pure quantum terms render as "q", "2q²", ….
std::string term(const ComboTerm& t, const std::string& unit_id);

/// Terms joined with signs, in the given order; "0" when empty.
std::string terms(const std::vector<ComboTerm>& ts, const std::string& unit_id);

/// Canonically ordered rendering of a combination.
std::string combo(const VertexCombo& c, const std::string& unit_id);

/// Polynomial in the given display names, e.g. "1/2·h³ - h·σ" (unicode)
/// or "1/2*h^3 - h*s" (plain).
std::string poly(const SymPoly& p, const std::vector<std::string>& names, bool unicode);

/// Schubert class combination, e.g. "2σ[4,1] + 2σ[3,2]"; "0" when empty.
std::string schubert(const schubert::SchubertCycle& c);

/// Spinor class combination, e.g. "2·γ[4,2]"; "0" when empty.
std::string spinor(const schubert::SpinorCycle& c);

/// Transliterate the unicode renderings back to plain ASCII:
/// σ→s, τ→t, γ→g, ·→*, superscripts→^k.
std::string to_ascii(const std::string& text);

}  // namespace horochow::render
