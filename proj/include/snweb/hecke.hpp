#pragma once

#include <map>

#include "snweb/laurent.hpp"
#include "snweb/perm.hpp"

namespace snweb {

/// Element of the Hecke algebra H_k in the h_sigma basis, coefficients in t
/// with q = t^n. The parameter n is carried explicitly because the quadratic
/// relation (h_i - t^{n-1})(h_i + t^{-n-1}) = 0 ties the algebra to q = t^n.
class HeckeElement {
public:
    HeckeElement(int k, int n) : k_(k), n_(n) {}
    static HeckeElement unit(int k, int n);
    static HeckeElement basis(const Permutation& sigma, int n);

    int strands() const { return k_; }
    int param_n() const { return n_; }
    const std::map<Permutation, LaurentPoly>& coeffs() const { return coeffs_; }
    LaurentPoly coeff(const Permutation& sigma) const;
    bool is_zero() const { return coeffs_.empty(); }

    HeckeElement& add(const Permutation& sigma, const LaurentPoly& c);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b);
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b);
    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
    HeckeElement scaled(const LaurentPoly& c) const;

    /// Right multiplication by h_{s_i}.
    HeckeElement times_generator(int i) const;

    bool operator==(const HeckeElement&) const = default;

private:
    int k_, n_;
    std::map<Permutation, LaurentPoly> coeffs_;
};

/// e_+ = sum_sigma q^{(n+1)l(sigma)/n} h_sigma, e_- = sum (-q^{(1-n)/n})^{l} h_sigma.
HeckeElement e_element(int k, int n, int sign);

/// P_+ = sum q^{2l(sigma)}, P_- = sum q^{-2l(sigma)} over S_k, in t (q = t^n).
LaurentPoly p_element(int k, int n, int sign);

/// The skein Lambda_k as a formal combination of canonical positive braid
/// words with coefficients (-q^{(1-n)/n})^{l(sigma)} in t.
struct WeightedWord {
    std::vector<int> word;
    LaurentPoly coeff;
};
std::vector<WeightedWord> lambda_skein(int k, int n);

}  // namespace snweb
