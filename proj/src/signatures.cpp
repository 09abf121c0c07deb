#include "avelab/signatures.hpp"

#include <algorithm>
#include <cmath>

#include "avelab/errors.hpp"
#include "combinations.hpp"

namespace avelab {

Signature::Signature(std::vector<int> diag) : diag_(std::move(diag)) {
    for (int d : diag_) {
        if (d != 1 && d != -1) throw InvalidInput("signature entries must be +1 or -1");
    }
}

Signature Signature::positive(std::size_t n) { return Signature(std::vector<int>(n, 1)); }

Signature Signature::from_index(std::size_t n, std::uint64_t index) {
    std::vector<int> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = ((index >> i) & 1U) ? -1 : 1;
    Signature s;
    s.diag_ = std::move(diag);
    return s;
}

Signature Signature::parse(std::string_view pattern) {
    std::vector<int> diag;
    for (char c : pattern) {
        switch (c) {
            case '+': case 'p': case '1': diag.push_back(1); break;
            case '-': case 'n': case '0': diag.push_back(-1); break;
            default:
                throw InvalidInput("invalid signature pattern '" + std::string(pattern) + "'");
        }
    }
    if (diag.empty()) throw InvalidInput("empty signature pattern");
    return Signature(std::move(diag));
}

std::uint64_t Signature::index() const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < diag_.size(); ++i) {
        if (diag_[i] < 0) idx |= std::uint64_t{1} << i;
    }
    return idx;
}

Vector Signature::as_vector() const {
    Vector v(static_cast<Eigen::Index>(diag_.size()));
    for (std::size_t i = 0; i < diag_.size(); ++i) v[static_cast<Eigen::Index>(i)] = diag_[i];
    return v;
}

Matrix Signature::as_matrix() const { return as_vector().asDiagonal(); }

Vector Signature::apply(const Vector& v) const {
    linalg::require_length(v, static_cast<Eigen::Index>(diag_.size()));
    return v.cwiseProduct(as_vector());
}

std::string Signature::to_string() const {
    std::string out;
    for (int d : diag_) out.push_back(d > 0 ? '+' : '-');
    return out;
}

SignatureRange enumerate_signatures(std::size_t n, std::size_t cap) {
    if (n == 0) throw InvalidInput("signature dimension must be positive");
    if (n > cap || n >= 63) {
        throw DimensionCapExceeded("refusing to enumerate 2^" + std::to_string(n) +
                                   " signatures (cap n <= " + std::to_string(cap) +
                                   "); cost grows as 2^n");
    }
    return SignatureRange(n);
}

Matrix apply_left(const Signature& s, const Matrix& a) {
    if (static_cast<Eigen::Index>(s.size()) != a.rows()) {
        throw InvalidInput("signature length does not match matrix rows");
    }
    return s.as_vector().asDiagonal() * a;
}

Matrix apply_right(const Matrix& a, const Signature& s) {
    if (static_cast<Eigen::Index>(s.size()) != a.cols()) {
        throw InvalidInput("signature length does not match matrix columns");
    }
    return a * s.as_vector().asDiagonal();
}

OrthantMembership orthant_membership(const Signature& s, const Vector& z, const Tolerances& tol) {
    linalg::require_length(z, static_cast<Eigen::Index>(s.size()), "point");
    const double threshold = tol.boundary * linalg::norm_inf(z);
    OrthantMembership out;
    out.inside = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double zi = z[static_cast<Eigen::Index>(i)];
        if (s[i] * zi < -threshold) {
            out.inside = false;
            out.violating_index = i;
            break;
        }
        if (std::abs(zi) <= threshold) out.on_boundary = true;
    }
    if (!out.inside) out.on_boundary = false;
    return out;
}

std::vector<Signature> signatures_of(const Vector& z, const Tolerances& tol) {
    const double norm = linalg::norm_inf(z);
    if (!(norm > 0.0)) throw InvalidInput("signatures_of: every signature matches the zero vector");
    const double threshold = tol.boundary * norm;
    std::vector<int> base(static_cast<std::size_t>(z.size()));
    std::vector<std::size_t> zeros;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        if (std::abs(z[i]) <= threshold) {
            base[static_cast<std::size_t>(i)] = 1;
            zeros.push_back(static_cast<std::size_t>(i));
        } else {
            base[static_cast<std::size_t>(i)] = z[i] > 0 ? 1 : -1;
        }
    }
    const auto combos = enumerate_signatures(std::max<std::size_t>(zeros.size(), 1), tol.max_n);
    const std::uint64_t count = zeros.empty() ? 1 : combos.count();
    std::vector<Signature> out;
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        auto diag = base;
        for (std::size_t k = 0; k < zeros.size(); ++k) {
            if ((mask >> k) & 1U) diag[zeros[k]] = -1;
        }
        out.emplace_back(std::move(diag));
    }
    return out;
}

namespace {

constexpr std::uint64_t kMaxActiveSets = 5'000'000;

}  // namespace

ConeRays orthant_extreme_rays(const Matrix& basis, const Signature& s, const Tolerances& tol) {
    const Eigen::Index n = basis.rows();
    const Eigen::Index k = basis.cols();
    if (n != static_cast<Eigen::Index>(s.size())) {
        throw InvalidInput("basis rows do not match signature length");
    }
    ConeRays out;
    if (k == 0) return out;

    const Matrix constraints = s.as_vector().asDiagonal() * basis;
    const auto try_direction = [&](const Vector& d) {
        for (double sign : {1.0, -1.0}) {
            const Vector raw = sign * (basis * d);
            const double norm = linalg::norm_inf(raw);
            if (norm == 0.0) continue;
            const Vector x = raw / norm;
            if (s.apply(x).minCoeff() < -tol.nonneg) continue;
            const bool seen = std::any_of(out.rays.begin(), out.rays.end(), [&](const Vector& r) {
                return linalg::norm_inf(Vector(r - x)) <= tol.dedupe;
            });
            if (!seen) out.rays.push_back(x);
        }
    };

    if (k == 1) {
        try_direction(Vector::Ones(1));
        return out;
    }
    if (k > n) return out;

    auto active = detail::first_combination(k - 1);
    std::uint64_t visited = 0;
    do {
        if (++visited > kMaxActiveSets) {
            out.truncated = true;
            break;
        }
        Matrix rows(k - 1, k);
        for (Eigen::Index r = 0; r < k - 1; ++r) {
            rows.row(r) = constraints.row(active[static_cast<std::size_t>(r)]);
        }
        Eigen::JacobiSVD<Matrix> svd(rows, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const double threshold = tol.sing * std::max(1.0, sv[0]);
        if (sv[k - 2] <= threshold) continue;
        try_direction(svd.matrixV().col(k - 1));
    } while (detail::next_combination(active, n));
    return out;
}

}  // namespace avelab
