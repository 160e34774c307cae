#include "snweb/laurent.hpp"

#include <numeric>
#include <sstream>

namespace snweb {

LaurentPoly LaurentPoly::constant(Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_[0] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::monomial(long exp, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const { return terms_.begin()->first; }
long LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.terms_) {
        for (auto& [eb, cb] : b.terms_) {
            long e = ea + eb;
            Int c = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::mul_term(long exp, const Int& coeff) {
    if (coeff == 0) {
        terms_.clear();
        return *this;
    }
    std::map<long, Int> out;
    for (auto& [e, c] : terms_) out.emplace(e + exp, c * coeff);
    terms_ = std::move(out);
    return *this;
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    if (is_zero()) return LaurentPoly::zero();
    // Long division from the top; exactness forces every partial leading
    // coefficient to be divisible by lead(b).
    LaurentPoly rem = *this, quot;
    const long eb = b.max_exp();
    const Int& cb = b.terms().rbegin()->second;
    while (!rem.is_zero()) {
        long ea = rem.max_exp();
        Int ca = rem.terms().rbegin()->second;
        if (ca % cb != 0) return std::nullopt;
        long e = ea - eb;
        Int c = ca / cb;
        quot.terms_[e] = c;
        LaurentPoly sub = b;
        sub.mul_term(e, c);
        rem -= sub;
        if (!rem.is_zero() && rem.max_exp() >= ea) return std::nullopt;  // no progress
    }
    return quot;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& b) const {
    auto q = try_divide(b);
    if (!q) throw NotDivisible();
    return *std::move(q);
}

LaurentPoly LaurentPoly::substitute_power(long a) const {
    LaurentPoly p;
    for (auto& [e, c] : terms_) p.terms_[e * a] = c;
    return p;
}

LaurentPoly LaurentPoly::substitute_neg() const {
    LaurentPoly p;
    for (auto& [e, c] : terms_) p.terms_[e] = (e % 2 == 0) ? c : -c;
    return p;
}

LaurentPoly LaurentPoly::rescale_exponents(long num, long den) const {
    LaurentPoly p;
    for (auto& [e, c] : terms_) {
        long en = e * num;
        if (en % den != 0)
            throw NonIntegralResult("exponent " + std::to_string(e) + " does not rescale by " +
                                    std::to_string(num) + "/" + std::to_string(den));
        p.terms_[en / den] = c;
    }
    return p;
}

bool LaurentPoly::exponents_divisible(long m) const {
    for (auto& [e, c] : terms_)
        if (e % m != 0) return false;
    return true;
}

long LaurentPoly::exponent_gcd() const {
    long g = 0;
    for (auto& [e, c] : terms_) g = std::gcd(g, e < 0 ? -e : e);
    return g;
}

bool LaurentPoly::congruent_mod2(const LaurentPoly& o) const {
    LaurentPoly d = *this - o;
    for (auto& [e, c] : d.terms_)
        if (c % 2 != 0) return false;
    return true;
}

bool LaurentPoly::nonnegative() const {
    for (auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string LaurentPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

RationalFunc::RationalFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    if (a.den_ == b.den_) return RationalFunc(a.num_ + b.num_, a.den_);
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunc RationalFunc::operator-() const { return RationalFunc(-num_, den_); }

LaurentPoly RationalFunc::reduce() const {
    auto q = num_.try_divide(den_);
    if (!q) throw NonIntegralResult("rational value does not reduce to a Laurent polynomial");
    return *std::move(q);
}

}  // namespace snweb
