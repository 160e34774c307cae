#include "snweb/hecke.hpp"

namespace snweb {

HeckeElement HeckeElement::unit(int k, int n) {
    HeckeElement e(k, n);
    e.add(Permutation::identity(k), LaurentPoly::one());
    return e;
}

HeckeElement HeckeElement::basis(const Permutation& sigma, int n) {
    HeckeElement e(sigma.degree(), n);
    e.add(sigma, LaurentPoly::one());
    return e;
}

LaurentPoly HeckeElement::coeff(const Permutation& sigma) const {
    auto it = coeffs_.find(sigma);
    return it == coeffs_.end() ? LaurentPoly::zero() : it->second;
}

HeckeElement& HeckeElement::add(const Permutation& sigma, const LaurentPoly& c) {
    if (c.is_zero()) return *this;
    auto it = coeffs_.find(sigma);
    if (it == coeffs_.end()) {
        coeffs_.emplace(sigma, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
    if (a.k_ != b.k_ || a.n_ != b.n_) throw MismatchedAlgebra("adding elements of different H_k");
    for (auto& [s, c] : b.coeffs_) a.add(s, c);
    return a;
}

HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
    if (a.k_ != b.k_ || a.n_ != b.n_) throw MismatchedAlgebra("subtracting elements of different H_k");
    for (auto& [s, c] : b.coeffs_) a.add(s, -c);
    return a;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
    HeckeElement r(k_, n_);
    for (auto& [s, v] : coeffs_) r.add(s, v * c);
    return r;
}

HeckeElement HeckeElement::times_generator(int i) const {
    // h_sigma h_{s_i} = h_{sigma s_i} when the length goes up, otherwise
    // (t^{n-1} - t^{-n-1}) h_sigma + t^{-2} h_{sigma s_i}.
    HeckeElement r(k_, n_);
    const LaurentPoly mid = LaurentPoly::monomial(n_ - 1) - LaurentPoly::monomial(-n_ - 1);
    const LaurentPoly tm2 = LaurentPoly::monomial(-2);
    for (auto& [s, c] : coeffs_) {
        Permutation ss = s.times_s(i);
        if (s(i) < s(i + 1)) {
            r.add(ss, c);
        } else {
            r.add(s, c * mid);
            r.add(ss, c * tm2);
        }
    }
    return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    if (a.k_ != b.k_ || a.n_ != b.n_) throw MismatchedAlgebra("multiplying elements of different H_k");
    HeckeElement r(a.k_, a.n_);
    for (auto& [tau, cb] : b.coeffs_) {
        HeckeElement cur = a.scaled(cb);
        for (int letter : tau.reduced_word()) cur = cur.times_generator(letter);
        for (auto& [s, c] : cur.coeffs_) r.add(s, c);
    }
    return r;
}

HeckeElement e_element(int k, int n, int sign) {
    HeckeElement e(k, n);
    for (auto& sigma : Permutation::all(k)) {
        int l = sigma.length();
        LaurentPoly c = sign > 0 ? LaurentPoly::monomial(static_cast<long>(n + 1) * l)
                                 : LaurentPoly::monomial(static_cast<long>(1 - n) * l,
                                                         (l % 2 == 0) ? 1 : -1);
        e.add(sigma, c);
    }
    return e;
}

LaurentPoly p_element(int k, int n, int sign) {
    LaurentPoly p;
    for (auto& sigma : Permutation::all(k))
        p += LaurentPoly::monomial(static_cast<long>(sign > 0 ? 2 : -2) * n * sigma.length());
    return p;
}

std::vector<WeightedWord> lambda_skein(int k, int n) {
    std::vector<WeightedWord> out;
    for (auto& sigma : Permutation::all(k)) {
        int l = sigma.length();
        out.push_back({sigma.reduced_word(),
                       LaurentPoly::monomial(static_cast<long>(1 - n) * l, (l % 2 == 0) ? 1 : -1)});
    }
    return out;
}

}  // namespace snweb
