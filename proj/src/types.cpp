#include "bell/types.hpp"

#include <algorithm>

namespace bell {

const char* functional_name(FunctionalKind k) {
    switch (k) {
        case FunctionalKind::CHSH: return "chsh";
        case FunctionalKind::Mermin: return "mermin";
        case FunctionalKind::Ardehali: return "ardehali";
        case FunctionalKind::Svetlichny: return "svetlichny";
    }
    return "?";
}

FunctionalKind functional_from_name(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (s == "chsh") return FunctionalKind::CHSH;
    if (s == "mermin") return FunctionalKind::Mermin;
    if (s == "ardehali") return FunctionalKind::Ardehali;
    if (s == "svetlichny") return FunctionalKind::Svetlichny;
    throw domain_error("unknown functional: " + name);
}

void check_compatible(int n, const BellFunctional& f) {
    if (f.kind == FunctionalKind::CHSH && n != 2)
        throw domain_error("CHSH requires n = 2");
    if (f.s_r != 1 && f.s_r != -1) throw domain_error("s_R must be +-1");
    if (f.s_i != 1 && f.s_i != -1) throw domain_error("s_I must be +-1");
}

bool conventional_pairing(int n, FunctionalKind k) {
    switch (k) {
        case FunctionalKind::CHSH: return n == 2;
        case FunctionalKind::Mermin: return n % 2 == 1;
        case FunctionalKind::Ardehali: return n % 2 == 0;
        case FunctionalKind::Svetlichny: return true;
    }
    return false;
}

BellFunctional conventional_functional(int n) {
    if (n == 2) return BellFunctional::chsh();
    return n % 2 == 1 ? BellFunctional::mermin() : BellFunctional::ardehali();
}

void EnvelopePolyline::validate() const {
    if (vertices.empty() || vertices.front() != std::pair<Rational, Rational>{Rational(0), Rational(0)})
        throw domain_error("envelope must start at (0,0)");
    for (size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i].first <= vertices[i - 1].first)
            throw domain_error("envelope vertices must strictly increase in w");
        if (vertices[i].second < vertices[i - 1].second)
            throw domain_error("envelope must be nondecreasing in f");
    }
    // concavity: consecutive slopes nonincreasing, as an exact cross product
    for (size_t i = 2; i < vertices.size(); ++i) {
        Rational dx1 = vertices[i - 1].first - vertices[i - 2].first;
        Rational dy1 = vertices[i - 1].second - vertices[i - 2].second;
        Rational dx2 = vertices[i].first - vertices[i - 1].first;
        Rational dy2 = vertices[i].second - vertices[i - 1].second;
        if (dx1 * dy2 - dy1 * dx2 > Rational(0))
            throw domain_error("envelope is not concave");
    }
}

Rational functional_value(const MomentPoint& p, const BellFunctional& f) {
    switch (f.kind) {
        case FunctionalKind::Mermin:
            return Rational(p.re_z);
        case FunctionalKind::CHSH:
        case FunctionalKind::Ardehali:
        case FunctionalKind::Svetlichny:
            return Rational(f.s_r * p.re_z + f.s_i * p.im_z);
    }
    throw domain_error("bad functional kind");
}

Rational functional_value(int n, const MomentPoint& p, const BellFunctional& f) {
    check_compatible(n, f);
    return functional_value(p, f);
}

}  // namespace bell
