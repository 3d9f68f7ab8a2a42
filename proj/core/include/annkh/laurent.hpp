#ifndef ANNKH_LAURENT_HPP
#define ANNKH_LAURENT_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace annkh {

// Exact integer Laurent polynomial in q and t.  Terms are kept in a canonical
// sparse form (zero coefficients dropped) and iterate in print order:
// descending by t-degree, then descending by q-degree.
class LaurentQT {
public:
    struct KeyLess {
        bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
            if (a.second != b.second) return a.second > b.second;  // t-degree desc
            return a.first > b.first;                              // q-degree desc
        }
    };
    using TermMap = std::map<std::pair<int, int>, long long, KeyLess>;  // (q_exp, t_exp) -> coeff

    LaurentQT() = default;

    static LaurentQT zero() { return LaurentQT{}; }
    static LaurentQT one() { return monomial(1, 0, 0); }
    static LaurentQT monomial(long long c, int q_exp, int t_exp = 0);
    static LaurentQT q_plus_qinv();  // q + q^-1
    static LaurentQT z();            // q*t + q^-1*t^-1

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    long long coeff(int q_exp, int t_exp) const;

    // Coefficient of t^t_exp as a polynomial in q alone.
    LaurentQT t_coefficient(int t_exp) const;
    int max_t_degree() const;  // throws on zero
    int min_t_degree() const;
    bool depends_on_t() const;

    LaurentQT& operator+=(const LaurentQT& o);
    LaurentQT& operator-=(const LaurentQT& o);
    LaurentQT operator+(const LaurentQT& o) const;
    LaurentQT operator-(const LaurentQT& o) const;
    LaurentQT operator*(const LaurentQT& o) const;
    LaurentQT operator-() const;
    bool operator==(const LaurentQT& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentQT& o) const { return !(*this == o); }

    LaurentQT pow(int n) const;  // n >= 0

    LaurentQT substitute_t_one() const;
    LaurentQT invert_q() const;      // q -> q^-1
    LaurentQT invert_qt() const;     // q -> q^-1, t -> t^-1
    LaurentQT substitute_q_minus_a_inv_sq() const;  // q -> -a^-2 (exponent slot reused for a)

    // Canonical rendering, e.g. "q*t + q^-1*t^-1"; variable names are
    // configurable so the same machinery prints q-only and a-only polynomials.
    std::string str(const char* var_q = "q", const char* var_t = "t") const;
    std::size_t term_count() const { return terms_.size(); }

private:
    void add_term(int q_exp, int t_exp, long long c);
    TermMap terms_;
};

struct NotInSubring : std::runtime_error {
    explicit NotInSubring(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial in z = q*t + (q*t)^-1 with coefficients in Z[q^±1].
// coeffs[n] is the z^n coefficient (a q-only Laurent polynomial).
struct ZForm {
    std::vector<LaurentQT> coeffs;

    LaurentQT expand() const;  // back into Z[q^±1, t^±1]
    std::string str() const;
    bool operator==(const ZForm& o) const;
};

// Same z-basis with q = -a^-2 substituted into each coefficient.
struct SkeinForm {
    std::vector<LaurentQT> coeffs;  // Laurent polynomials in a
    std::string str() const;
};

ZForm to_zform(const LaurentQT& p);          // throws NotInSubring on failure
SkeinForm to_skein_form(const ZForm& zf);

}  // namespace annkh

#endif
