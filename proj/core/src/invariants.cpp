#include "leadsto/invariants.hpp"

#include "leadsto/codes.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace leadsto {

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i;
        long long c = 0;
        while (j < terms_.size() && terms_[j].first == terms_[i].first) c += terms_[j++].second;
        if (c != 0) terms_[out++] = {terms_[i].first, c};
        i = j;
    }
    terms_.resize(out);
}

LaurentPoly LaurentPoly::monomial(int exp, long long coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.push_back({exp, coeff});
    return p;
}

long long LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(),
                               std::pair<int, long long>{exp, 0});
    return it != terms_.end() && it->first == exp ? it->second : 0;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.back().first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    std::vector<std::pair<int, long long>> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) prod.push_back({ea + eb, ca * cb});
    terms_ = std::move(prod);
    normalize();
    return *this;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        p.terms_.push_back({-it->first, it->second});
    return p;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long mag = c < 0 ? -c : c;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (e == 0)
            os << mag;
        else {
            if (mag != 1) os << mag << '*';
            os << 'A';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

namespace {

LaurentPoly delta_power(int k) {
    const LaurentPoly delta =
        LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    LaurentPoly p = LaurentPoly::one();
    for (int i = 0; i < k; ++i) p *= delta;
    return p;
}

LaurentPoly bracket_rec(const Diagram& d, BracketCache& cache) {
    const int n = d.crossing_count();
    if (n == 0) {
        if (d.free_loops < 1)
            throw std::logic_error("kauffman_bracket: empty diagram");
        return delta_power(d.free_loops - 1);
    }
    const std::string key = serialize_pd(d);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<CrossingState> a(n, CrossingState::Keep);
    a[0] = CrossingState::SmoothA;
    LaurentPoly va = bracket_rec(apply_assignment(d, a), cache);
    a[0] = CrossingState::SmoothB;
    LaurentPoly vb = bracket_rec(apply_assignment(d, a), cache);
    LaurentPoly val = LaurentPoly::monomial(1) * va + LaurentPoly::monomial(-1) * vb;
    cache.emplace(key, val);
    return val;
}

} // namespace

LaurentPoly kauffman_bracket(const Diagram& d, int budget, BracketCache* cache) {
    if (d.crossing_count() > budget)
        throw BudgetExceeded(d.crossing_count(), budget);
    if (cache != nullptr) return bracket_rec(d, *cache);
    BracketCache local;
    return bracket_rec(d, local);
}

bool InvariantSignature::operator<(const InvariantSignature& o) const {
    if (components != o.components) return components < o.components;
    if (!(poly_low == o.poly_low)) return poly_low < o.poly_low;
    return poly_high < o.poly_high;
}

InvariantSignature signature_of(const Diagram& d, int budget, BracketCache* cache) {
    InvariantSignature sig;
    sig.components = component_count(d);
    const int w = self_writhe(d);
    // (-A^3)^(-w) = (-1)^w A^(-3w)
    LaurentPoly p = kauffman_bracket(d, budget, cache) *
                    LaurentPoly::monomial(-3 * w, w % 2 == 0 ? 1 : -1);
    LaurentPoly q = p.substitute_inverse();
    if (q < p) std::swap(p, q);
    sig.poly_low = std::move(p);
    sig.poly_high = std::move(q);
    return sig;
}

std::string family_name(Family f) {
    return f == Family::Torus2 ? "torus2" : "twist";
}

std::string target_name(const FamilyTarget& t) {
    return family_name(t.family) + "(" + std::to_string(t.m) + ")";
}

Diagram reference_diagram(const FamilyTarget& t) {
    return t.family == Family::Torus2 ? build_torus2_diagram(t.m)
                                      : build_twist_diagram(t.m);
}

const InvariantSignature& reference_signature(const FamilyTarget& t) {
    static std::map<std::pair<int, int>, InvariantSignature> cache;
    const auto key = std::make_pair(static_cast<int>(t.family), t.m);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Diagram d = reference_diagram(t);
        it = cache.emplace(key, signature_of(d, d.crossing_count())).first;
    }
    return it->second;
}

} // namespace leadsto
