#include "snweb/perm.hpp"

#include <algorithm>

namespace snweb {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw OutOfRange("image sequence is not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int k, int i, int j) {
    if (i < 1 || j < 1 || i > k || j > k) throw OutOfRange("transposition out of range");
    auto p = identity(k);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

Permutation Permutation::tau(int n, int k) {
    if (k < 0 || k > n) throw OutOfRange("tau(n,k) requires 0 <= k <= n");
    std::vector<int> v(n);
    for (int i = 1; i <= k; ++i) v[i - 1] = n - k + i;
    for (int i = k + 1; i <= n; ++i) v[i - 1] = i - k;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[img_[i] - 1] = i + 1;
    return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw OutOfRange("composing permutations of different degrees");
    std::vector<int> v(a.img_.size());
    for (int i = 1; i <= a.degree(); ++i) v[i - 1] = a(b(i));
    return Permutation(std::move(v));
}

int Permutation::length() const { return word_length(img_); }

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

Permutation Permutation::times_s(int i) const {
    Permutation p = *this;
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> seq = img_, kill;
    const int k = degree();
    for (int m = k; m >= 1; --m) {
        int p = static_cast<int>(std::find(seq.begin(), seq.end(), m) - seq.begin());  // 0-based
        for (int j = p; j < m - 1; ++j) {
            std::swap(seq[j], seq[j + 1]);
            kill.push_back(j + 1);
        }
    }
    std::reverse(kill.begin(), kill.end());
    return kill;
}

std::vector<Permutation> Permutation::all(int k) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) v[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

long pi_count(std::span<const int> s1, std::span<const int> s2) {
    long c = 0;
    for (int a : s1)
        for (int b : s2)
            if (a > b) ++c;
    return c;
}

int word_length(std::span<const int> word) {
    int l = 0;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++l;
    return l;
}

LaurentPoly quantum_int(int m) {
    if (m < 0) throw NegativeArgument("[m] requires m >= 0");
    LaurentPoly p;
    for (int i = 0; i < m; ++i) p += LaurentPoly::monomial(m - 1 - 2 * i);
    return p;
}

LaurentPoly quantum_factorial(int m) {
    if (m < 0) throw NegativeArgument("[m]! requires m >= 0");
    LaurentPoly p = LaurentPoly::one();
    for (int i = 1; i <= m; ++i) p *= quantum_int(i);
    return p;
}

}  // namespace snweb
