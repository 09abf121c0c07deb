#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avelab/linalg.hpp"

namespace avelab {

/// Diagonal +-1 matrix, identified with the closed orthant {z : diag * z >= 0}.
class Signature {
public:
    Signature() = default;
    /// Throws InvalidInput unless every entry is exactly +1 or -1.
    explicit Signature(std::vector<int> diag);

    static Signature positive(std::size_t n);
    /// Bit i of `index` set means entry i is -1 (bit 0 is the first entry).
    static Signature from_index(std::size_t n, std::uint64_t index);
    /// Parses a pattern such as "+-+" (also accepts 'p'/'n' and '1'/'0').
    static Signature parse(std::string_view pattern);

    std::size_t size() const { return diag_.size(); }
    int operator[](std::size_t i) const { return diag_[i]; }
    const std::vector<int>& diag() const { return diag_; }

    std::uint64_t index() const;
    Vector as_vector() const;
    Matrix as_matrix() const;
    /// Entrywise product diag * v.
    Vector apply(const Vector& v) const;
    std::string to_string() const;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    std::vector<int> diag_;
};

/// Forward range over all 2^n signatures in binary counting order, starting at all +1.
class SignatureRange {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Signature;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Signature;

        iterator() = default;
        iterator(std::size_t n, std::uint64_t index) : n_(n), index_(index) {}

        Signature operator*() const { return Signature::from_index(n_, index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++index_;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        std::size_t n_ = 0;
        std::uint64_t index_ = 0;
    };

    explicit SignatureRange(std::size_t n) : n_(n) {}

    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, count()}; }
    std::uint64_t count() const { return std::uint64_t{1} << n_; }
    std::size_t dimension() const { return n_; }

private:
    std::size_t n_;
};

/// All 2^n signatures. Throws DimensionCapExceeded when n > cap.
SignatureRange enumerate_signatures(std::size_t n, std::size_t cap = kDefaultMaxDimension);

/// S * A: row i of A multiplied by S[i].
Matrix apply_left(const Signature& s, const Matrix& a);
/// A * S: column j of A multiplied by S[j].
Matrix apply_right(const Matrix& a, const Signature& s);

struct OrthantMembership {
    bool inside = false;
    bool on_boundary = false;
    /// First index (0-based) with s[i] * z[i] below the boundary tolerance.
    std::optional<std::size_t> violating_index;
};

/// inside: s[i]*z[i] >= -tol.boundary*||z||_inf for all i;
/// on_boundary: inside and some |z[i]| <= tol.boundary*||z||_inf.
OrthantMembership orthant_membership(const Signature& s, const Vector& z, const Tolerances& tol);

/// Every signature S with S z = |z| up to tol.boundary; 2^(#zero entries) of them.
/// Throws InvalidInput for z = 0 and DimensionCapExceeded past tol.max_n zeros.
std::vector<Signature> signatures_of(const Vector& z, const Tolerances& tol);

struct ConeRays {
    /// Extreme rays, each normalized to infinity norm 1.
    std::vector<Vector> rays;
    /// Set when the active-set enumeration was cut short by its work cap.
    bool truncated = false;
};

/**
 * Extreme rays of the polyhedral cone span(basis) intersected with orthant `s`.
 *
 * The cone is pointed because the orthant is; an extreme ray is determined by
 * k-1 linearly independent active sign constraints (k = basis.cols()), so
 * all (n choose k-1) active sets are enumerated. An empty result means the
 * subspace meets the orthant only at the origin.
 */
ConeRays orthant_extreme_rays(const Matrix& basis, const Signature& s, const Tolerances& tol);

}  // namespace avelab
