#include "annkh/laurent.hpp"

#include <sstream>

namespace annkh {

LaurentQT LaurentQT::monomial(long long c, int q_exp, int t_exp) {
    LaurentQT p;
    p.add_term(q_exp, t_exp, c);
    return p;
}

LaurentQT LaurentQT::q_plus_qinv() {
    return monomial(1, 1) + monomial(1, -1);
}

LaurentQT LaurentQT::z() {
    return monomial(1, 1, 1) + monomial(1, -1, -1);
}

void LaurentQT::add_term(int q_exp, int t_exp, long long c) {
    if (c == 0) return;
    auto key = std::make_pair(q_exp, t_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long long LaurentQT::coeff(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? 0 : it->second;
}

LaurentQT LaurentQT::t_coefficient(int t_exp) const {
    LaurentQT out;
    for (const auto& [key, c] : terms_)
        if (key.second == t_exp) out.add_term(key.first, 0, c);
    return out;
}

int LaurentQT::max_t_degree() const {
    if (terms_.empty()) throw std::logic_error("max_t_degree of zero polynomial");
    return terms_.begin()->first.second;  // first key has largest t
}

int LaurentQT::min_t_degree() const {
    if (terms_.empty()) throw std::logic_error("min_t_degree of zero polynomial");
    return terms_.rbegin()->first.second;
}

bool LaurentQT::depends_on_t() const {
    for (const auto& [key, c] : terms_)
        if (key.second != 0) return true;
    return false;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

LaurentQT LaurentQT::operator+(const LaurentQT& o) const {
    LaurentQT r = *this;
    r += o;
    return r;
}

LaurentQT LaurentQT::operator-(const LaurentQT& o) const {
    LaurentQT r = *this;
    r -= o;
    return r;
}

LaurentQT LaurentQT::operator*(const LaurentQT& o) const {
    LaurentQT r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

LaurentQT LaurentQT::operator-() const {
    LaurentQT r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

LaurentQT LaurentQT::pow(int n) const {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    LaurentQT r = one();
    for (int it = 0; it < n; ++it) r = r * (*this);
    return r;
}

LaurentQT LaurentQT::substitute_t_one() const {
    LaurentQT r;
    for (const auto& [key, c] : terms_) r.add_term(key.first, 0, c);
    return r;
}

LaurentQT LaurentQT::invert_q() const {
    LaurentQT r;
    for (const auto& [key, c] : terms_) r.add_term(-key.first, key.second, c);
    return r;
}

LaurentQT LaurentQT::invert_qt() const {
    LaurentQT r;
    for (const auto& [key, c] : terms_) r.add_term(-key.first, -key.second, c);
    return r;
}

LaurentQT LaurentQT::substitute_q_minus_a_inv_sq() const {
    LaurentQT r;
    for (const auto& [key, c] : terms_) {
        long long sign = (key.first % 2 == 0) ? 1 : -1;
        r.add_term(-2 * key.first, key.second, sign * c);
    }
    return r;
}

namespace {

void append_power(std::ostringstream& os, const char* var, int e, bool& first_factor) {
    if (e == 0) return;
    if (!first_factor) os << '*';
    first_factor = false;
    os << var;
    if (e != 1) os << '^' << e;
}

}  // namespace

std::string LaurentQT::str(const char* var_q, const char* var_t) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [key, c] : terms_) {
        long long mag = c < 0 ? -c : c;
        if (first_term) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first_term = false;
        bool first_factor = true;
        bool has_vars = key.first != 0 || key.second != 0;
        if (mag != 1 || !has_vars) {
            os << mag;
            first_factor = false;
        }
        append_power(os, var_q, key.first, first_factor);
        append_power(os, var_t, key.second, first_factor);
    }
    return os.str();
}

LaurentQT ZForm::expand() const {
    LaurentQT out;
    LaurentQT zp = LaurentQT::one();
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        out += coeffs[n] * zp;
        zp = zp * LaurentQT::z();
    }
    return out;
}

bool ZForm::operator==(const ZForm& o) const {
    std::size_t n = std::max(coeffs.size(), o.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        LaurentQT a = i < coeffs.size() ? coeffs[i] : LaurentQT::zero();
        LaurentQT b = i < o.coeffs.size() ? o.coeffs[i] : LaurentQT::zero();
        if (a != b) return false;
    }
    return true;
}

namespace {

// z-basis rendering shared by ZForm and SkeinForm: one segment per nonzero
// z-power, highest power first.  A coefficient is parenthesized unless it is
// a single term with positive sign.
std::string zbasis_str(const std::vector<LaurentQT>& coeffs, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = coeffs.size(); idx-- > 0;) {
        const LaurentQT& c = coeffs[idx];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str(var, "t");
        bool plain = c.term_count() == 1 && cs[0] != '-';
        bool is_one = c == LaurentQT::one();
        if (idx == 0) {
            os << (plain ? cs : "(" + cs + ")");
        } else {
            if (!is_one) os << (plain ? cs : "(" + cs + ")") << '*';
            os << 'z';
            if (idx > 1) os << '^' << idx;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace

std::string ZForm::str() const { return zbasis_str(coeffs, "q"); }

std::string SkeinForm::str() const { return zbasis_str(coeffs, "a"); }

ZForm to_zform(const LaurentQT& p) {
    ZForm zf;
    LaurentQT rest = p;
    while (!rest.is_zero() && rest.max_t_degree() > 0) {
        int d = rest.max_t_degree();
        // top t-layer of z^d is q^d t^d, so the z^d coefficient is
        // (coefficient of t^d in rest) * q^-d
        LaurentQT cq = rest.t_coefficient(d) * LaurentQT::monomial(1, -d);
        if (static_cast<int>(zf.coeffs.size()) <= d) zf.coeffs.resize(d + 1);
        zf.coeffs[d] += cq;
        rest -= cq * LaurentQT::z().pow(d);
    }
    if (rest.depends_on_t())
        throw NotInSubring("polynomial is not in Z[q^+-1][z]: remainder " + rest.str());
    if (!rest.is_zero()) {
        if (zf.coeffs.empty()) zf.coeffs.resize(1);
        zf.coeffs[0] += rest;
    }
    return zf;
}

SkeinForm to_skein_form(const ZForm& zf) {
    SkeinForm sf;
    sf.coeffs.reserve(zf.coeffs.size());
    for (const auto& c : zf.coeffs) sf.coeffs.push_back(c.substitute_q_minus_a_inv_sq());
    return sf;
}

}  // namespace annkh
