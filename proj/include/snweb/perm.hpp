#pragma once

#include <compare>
#include <span>
#include <vector>

#include "snweb/laurent.hpp"

namespace snweb {

/// Permutation of {1,...,k}, stored as the image sequence sigma(1..k).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int k);
    static Permutation transposition(int k, int i, int j);
    /// Block rotation of §-tau type: 1..k -> n-k+1..n, k+1..n -> 1..n-k.
    static Permutation tau(int n, int k);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    /// Function composition: (a*b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    /// Number of inversions.
    int length() const;
    bool is_identity() const;

    /// Canonical reduced word (letters 1..k-1): repeatedly move the largest
    /// displaced value right; the unique positive braid word used everywhere.
    std::vector<int> reduced_word() const;

    /// Right multiplication by the elementary transposition s_i: swaps the
    /// entries at positions i, i+1 of the image sequence.
    Permutation times_s(int i) const;

    static std::vector<Permutation> all(int k);

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

/// #{(a,b) in s1 x s2 : a > b}.
long pi_count(std::span<const int> s1, std::span<const int> s2);

/// Inversions of an arbitrary sequence of distinct values.
int word_length(std::span<const int> word);

/// Quantum integer [m] = (q^m - q^{-m})/(q - q^{-1}) as a polynomial in q
/// (unit exponents; rescale to t with substitute_power(n)).
LaurentPoly quantum_int(int m);
/// [m]! = [1][2]...[m].
LaurentPoly quantum_factorial(int m);

}  // namespace snweb
