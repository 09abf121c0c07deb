// Acceptance suite: one PASS/FAIL line per criterion P1-P11.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "avelab/ave.hpp"
#include "avelab/bench.hpp"
#include "avelab/compare.hpp"
#include "avelab/homotopy.hpp"
#include "avelab/lcp.hpp"
#include "avelab/spectrum.hpp"

using namespace avelab;

namespace {

Matrix mat2(double a, double b, double c, double d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

const Matrix B = mat2(1, -1, 1, -1);
const Matrix C = mat2(2, 0, 0, 2);

/// Collects failed sub-checks with a short description.
struct Checks {
    std::vector<std::string> failures;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void near(double got, double want, double tol, const std::string& what) {
        std::ostringstream s;
        s.precision(17);
        s << what << " = " << got << " (want " << want << " +- " << tol << ")";
        expect(std::abs(got - want) <= tol, s.str());
    }
};

bool contains(const ave::SolveReport& r, const Vector& z) {
    for (const auto& s : r.solutions) {
        if ((s.z - z).cwiseAbs().maxCoeff() <= 1e-9) return true;
    }
    return false;
}

std::string suite_line(const bench::SuiteReport& r) {
    std::ostringstream s;
    s << r.name << ": " << r.passed << " passed, " << r.failed << " failed, " << r.skipped << " skipped";
    if (r.generator_rejections > 0) s << ", " << r.generator_rejections << " draws filtered";
    return s.str();
}

void suite(Checks& c, std::string_view name) {
    const auto r = bench::run_suite(name, 42);
    c.notes << suite_line(r) << "; ";
    c.expect(r.ok(), "suite " + std::string(name) + " not clean");
}

void p1(Checks& c) {
    c.near(spectrum::rho_sign_real(B), 2.0, 1e-9, "rho_R(B)");
    c.near(spectrum::rho_a(B), 0.0, 1e-9, "rho_a(B)");
    const auto d = ave::degree(B);
    c.expect(d.degree == 1, "degree(B) != 1");
    const auto s = ave::solve_all(B, vec2(0, -1));
    c.expect(s.solutions.size() >= 2, "b = (0,-1) has fewer than 2 solutions");
    c.expect(contains(s, vec2(1, 0)) && contains(s, vec2(-1, -2)), "witness solutions (1,0), (-1,-2) missing");
    c.notes << "deg F_B = " << (d.degree ? std::to_string(*d.degree) : "undefined") << ", |F_B^-1(0,-1)| = "
            << s.solutions.size();
}

void p2(Checks& c) {
    const auto d04 = ave::degree(0.4 * C);
    const auto d10 = ave::degree(C);
    c.expect(d04.degree == 1, "degree(0.4 C) != 1");
    c.expect(d10.degree == 0, "degree(C) != 0");
    const auto bp = homotopy::properness_breakpoints(C).breakpoints;
    c.expect(bp.size() == 1, "C must have exactly one properness breakpoint");
    if (bp.size() == 1) c.near(bp[0], 0.5, 1e-9, "breakpoint");
    const auto s = ave::solve_all(C, vec2(-1, -1));
    c.expect(s.solutions.size() == 4, "solve(C, (-1,-1)) does not have exactly 4 solutions");
    for (double x : {1.0, -1.0 / 3.0}) {
        for (double y : {1.0, -1.0 / 3.0}) c.expect(contains(s, vec2(x, y)), "missing solution of C z - ...");
    }
    c.expect(s.orientation_sum() == 0, "orientation sum for C != 0");
    c.notes << "degree 0.4C = 1, C = 0; breakpoints {0.5}; 4 solutions, orientation sum " << s.orientation_sum();
}

void p3(Checks& c) {
    c.near(spectrum::rho_a(mat2(1, -0.5, 0.5, 0)), 0.5, 1e-8, "rho_a(D_0)");
    for (double eps : {1e-3, 1e-2, 1e-1}) {
        const double want = 0.5 * (std::sqrt(2.0) * std::sqrt(1.0 + eps) - 1.0);
        c.near(spectrum::rho_a(mat2(1, -0.5 - eps, 0.5, 0)), want, 1e-8, "rho_a(D_eps), eps=" + std::to_string(eps));
    }
    c.notes << "rho_a(D_0) = 0.5, rho_a(D_1e-3) = " << spectrum::rho_a(mat2(1, -0.501, 0.5, 0));
}

void p4(Checks& c) {
    const Matrix flipped = apply_right(B, Signature::parse("+-"));
    c.expect(flipped == Matrix::Ones(2, 2), "B diag(1,-1) is not the all-ones matrix");
    c.near(spectrum::rho_a(flipped), 2.0, 1e-9, "rho_a(B diag(1,-1))");
    for (const auto s : enumerate_signatures(2)) {
        c.near(spectrum::rho_a(apply_left(s, B)), 0.0, 1e-9, "rho_a(S B), S=" + s.to_string());
    }
    c.notes << "column flip 0 -> 2, row flips stay 0";
}

void p5(Checks& c) {
    for (Eigen::Index i = 0; i < 2; ++i) {
        c.near(spectrum::rho_a(spectrum::principal_submatrix(B, i)), 1.0, 1e-9, "rho_a(B_" + std::to_string(i + 1) + ")");
    }
    Matrix bb = Matrix::Zero(4, 4);
    bb.block(0, 0, 2, 2) = B;
    bb.block(2, 2, 2, 2) = B;
    c.near(spectrum::rho_a(bb), 0.0, 1e-9, "rho_a(diag(B,B))");
    c.expect(ave::degree(bb).degree == 1, "degree(diag(B,B)) != 1");
    int not_one = 0;
    for (Eigen::Index i = 0; i < 4; ++i) {
        const auto d = ave::degree(spectrum::principal_submatrix(bb, i));
        const bool ok = !d.degree || *d.degree != 1;
        c.expect(ok, "submatrix " + std::to_string(i + 1) + " of diag(B,B) has degree 1");
        not_one += ok;
    }
    c.notes << "diag(B,B): rho_a 0, degree 1; " << not_one << "/4 deletions lose degree 1";
}

void p8(Checks& c) {
    const auto red = lcp::ave_to_lcp(B, Signature::positive(2), Vector::Zero(2));
    c.expect((red.M - mat2(3, -2, 2, -1)).cwiseAbs().maxCoeff() <= 1e-12, "(I-B)^-1 (I+B) != [[3,-2],[2,-1]]");
    const auto q = lcp::q_check(red.M);
    c.expect(q.verdict == lcp::Verdict::Q && q.method == lcp::Method::exact_2d, "M_B not Q by exact 2-D check");
    c.expect(!lcp::p_matrix_check(red.M), "M_B passes the P-matrix check");
    c.notes << "M_B exact Q, not P; ";
    suite(c, "q-matrix");
}

void p10(Checks& c) {
    std::vector<Matrix> matrices;
    for (int n : {2, 3, 4}) {
        const auto fam = bench::generate({bench::Family::nonneg, n, n == 4 ? 16 : 17, std::nullopt, 42});
        matrices.insert(matrices.end(), fam.matrices.begin(), fam.matrices.end());
    }
    double worst_radii = 0.0, worst_functional = 0.0;
    for (const auto& a : matrices) {
        const double perron = oracle::perron_power(a);
        const auto r = compare::coincidence_report(a);
        worst_radii = std::max({worst_radii, std::abs(r.rho_a - r.rho_R), std::abs(r.rho_a - perron),
                                std::abs(r.rho_R - perron)});
        worst_functional = std::max({worst_functional, std::abs(r.lhs - r.rho_R), std::abs(r.rhs - r.rho_a)});
    }
    c.expect(worst_radii <= 1e-7, "radii disagree with the Perron root by " + std::to_string(worst_radii));
    c.expect(worst_functional <= 1e-3, "max-min values off the radii by " + std::to_string(worst_functional));
    c.expect(!compare::coincidence_report(B).coincide_spectra, "B reports coinciding spectra");
    c.notes << "50 nonneg: max radius gap " << worst_radii << ", max functional gap " << worst_functional
            << "; B coincide_spectra = false";
}

void p11(Checks& c) {
    c.expect(!ave::ker_im_intersection_trivial(mat2(1, 1, 0, 1)), "Jordan block reports trivial ker/im intersection");
    suite(c, "ker-im");
    suite(c, "pointed");
    c.notes << "Jordan block fails as expected";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria = {
        {"P1", p1},
        {"P2", p2},
        {"P3", p3},
        {"P4", p4},
        {"P5", p5},
        {"P6", [](Checks& c) { suite(c, "odd-count"); }},
        {"P7", [](Checks& c) { suite(c, "mod2-switch"); }},
        {"P8", p8},
        {"P9", [](Checks& c) { suite(c, "degree-winding"); }},
        {"P10", p10},
        {"P11", p11},
    };
    int failed = 0;
    for (const auto& [id, run] : criteria) {
        Checks c;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%-4s %s  %s [%.1fs]\n", id.c_str(), ok ? "PASS" : "FAIL", c.notes.str().c_str(), secs);
        for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
