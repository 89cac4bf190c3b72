// Acceptance suite: one pass/fail line per criterion, exit 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nfct/homological.hpp"
#include "nfct/normalform.hpp"
#include "nfct/polyvec.hpp"
#include "nfct/problem.hpp"
#include "nfct/symmetry.hpp"
#include "nfct/transversal.hpp"

#include "testutil.hpp"

using namespace nfct;
using testutil::Rng;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : (" (" + detail + ")").c_str());
    if (!ok) ++failures;
}

HomogeneousVF random_hvf(Rng& rng, size_t n, int k) {
    SliceBasis b = slice_basis(n, k);
    std::vector<Rational> v(b.size());
    for (auto& x : v) x = rng.small_rational();
    return from_coords(v, b);
}

RatMatrix diag(const std::vector<Rational>& lambda) {
    RatMatrix m(lambda.size(), lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) m(i, i) = lambda[i];
    return m;
}

const RatMatrix kBogdanovTakens{{0, 1}, {0, 0}};

SignedGroup z2_reversing() {
    return generate_group(2, {SignedElement{RatMatrix{{1, 0}, {0, -1}}, -1}});
}

// 1. ker Ad_{L^t}^k (+) im Ad_L^k = P_V^k for 100 random rational L,
//    each checked at every k in {2,3,4}.
void criterion1() {
    Rng rng(20260101);
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int iter = 0; iter < 100 && ok; ++iter) {
        const size_t n = static_cast<size_t>(rng.int_between(2, 3));
        const RatMatrix L = rng.matrix(n, n);
        for (int k = 2; k <= 4 && ok; ++k) {
            const DecompositionReport r = verify_decomposition(L, k);
            ok = r.ok() && r.transversal_dim + r.image_dim == r.target_dim;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "100 random L x 3 degrees, " << secs << " s";
    criterion(1, "graded decomposition for random linear parts", ok && secs < 10.0, detail.str());
}

// 2. nf_space_nonsym equals the independently enumerated resonant span for
//    diagonal L.
void criterion2() {
    const std::vector<std::vector<Rational>> lambdas = {{1, -1}, {1, 2}, {2, -1, 1}};
    bool ok = true;
    for (const auto& lambda : lambdas)
        for (int k = 2; k <= 6 && ok; ++k) {
            const SliceBasis b = slice_basis(lambda.size(), k);
            std::vector<std::vector<Rational>> rows;
            for (size_t j = 0; j < b.size(); ++j) {
                const TermIndex& t = b.term(j);
                Rational weight;
                for (size_t p = 0; p < lambda.size(); ++p)
                    weight += Rational(t.exponents[p]) * lambda[p];
                if (weight == lambda[t.component]) {
                    std::vector<Rational> row(b.size());
                    row[j] = 1;
                    rows.push_back(std::move(row));
                }
            }
            RatMatrix m(rows.size(), b.size());
            for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
            ok = nf_space_nonsym(diag(lambda), k) == Subspace::span_of_rows(m);
        }
    criterion(2, "resonance oracle for semisimple diagonal parts", ok);
}

// 3. Bogdanov-Takens transversal: dimension 2 with the hand-derived basis.
void criterion3() {
    bool ok = true;
    for (int k = 2; k <= 6 && ok; ++k) {
        const SliceBasis b = slice_basis(2, k);
        Exponents xk{k, 0};
        RatMatrix expected(2, b.size());
        expected(0, b.index_of(TermIndex{0, xk})) = 1;
        expected(0, b.index_of(TermIndex{1, {k - 1, 1}})) = 1;
        expected(1, b.index_of(TermIndex{1, xk})) = 1;
        ok = nf_space_nonsym(kBogdanovTakens, k) == Subspace::span_of_rows(expected);
    }
    criterion(3, "Bogdanov-Takens transversal basis per degree", ok);
}

// 4. Reversible Z2 Bogdanov-Takens: dimension 1 per degree, basis (0, x^k),
//    and Q^2(Gamma) decomposes as 3 = 1 + 2.
void criterion4() {
    const SignedGroup g = z2_reversing();
    bool ok = true;
    for (int k = 2; k <= 6 && ok; ++k) {
        const SliceBasis b = slice_basis(2, k);
        RatMatrix expected(1, b.size());
        expected(0, b.index_of(TermIndex{1, {k, 0}})) = 1;
        ok = nf_space_reveq(kBogdanovTakens, g, k) == Subspace::span_of_rows(expected);
    }
    const DecompositionReport r = verify_decomposition(kBogdanovTakens, 2, g);
    ok = ok && r.target_dim == 3 && r.transversal_dim == 1 && r.image_dim == 2 && r.ok();
    criterion(4, "reversible Z2 Bogdanov-Takens transversal and decomposition", ok,
              "Q^2 = 1 + 2");
}

// 5. Planar center: dims 0 at k = 2 and 2 at k = 3.
void criterion5() {
    const RatMatrix center{{0, -1}, {1, 0}};
    const bool ok = nf_space_nonsym(center, 2).dim() == 0 && nf_space_nonsym(center, 3).dim() == 2;
    criterion(5, "planar center transversal dimensions", ok);
}

// 6. dim_by_trace equals dim fixed_slice for the four test groups, k <= 5.
void criterion6() {
    const std::vector<SignedGroup> groups = {
        SignedGroup::trivial(2),
        generate_group(2, {SignedElement{RatMatrix{{-1, 0}, {0, -1}}, 1}}),
        z2_reversing(),
        generate_group(2, {SignedElement{RatMatrix{{0, -1}, {1, 0}}, 1},
                           SignedElement{RatMatrix{{1, 0}, {0, -1}}, -1}}),
    };
    bool ok = groups[3].order() == 8;
    for (const auto& g : groups)
        for (int k = 1; k <= 5 && ok; ++k)
            for (SliceMode mode : {SliceMode::Equivariant, SliceMode::Reversible})
                ok = dim_by_trace(g, k, mode) == static_cast<long>(fixed_slice(g, k, mode).dim());
    criterion(6, "trace oracle agrees with fixed-slice bases", ok);
}

// 7. Containment theorems on random jets plus the corrupted negative control.
void criterion7() {
    Rng rng(20260107);
    bool ok = true;
    for (int iter = 0; iter < 50 && ok; ++iter) {
        const size_t n = static_cast<size_t>(rng.int_between(2, 3));
        const int k = static_cast<int>(rng.int_between(1, 3));
        TruncatedVF h(n, k);
        h.set_part(random_hvf(rng, n, 1));
        for (int d = 2; d <= k; ++d) h.set_part(random_hvf(rng, n, d));
        ok = verify_containment(h, k);
    }
    // reversible jets over Z2 reflections in dimensions 2 and 3; the linear
    // parts are random matrices anticommuting with the reflection
    const SignedGroup g2 = z2_reversing();
    RatMatrix refl3 = RatMatrix::identity(3);
    refl3(2, 2) = -1;
    const SignedGroup g3 = generate_group(3, {SignedElement{refl3, -1}});
    for (int iter = 0; iter < 25 && ok; ++iter) {
        const size_t n = iter % 2 == 0 ? 2 : 3;
        const SignedGroup& g = n == 2 ? g2 : g3;
        const int k = static_cast<int>(rng.int_between(1, 3));
        TruncatedVF h(n, k);
        RatMatrix L(n, n);
        if (n == 2) {
            L(0, 1) = rng.small_rational();
            L(1, 0) = rng.small_rational();
        } else {
            L(0, 2) = rng.small_rational();
            L(1, 2) = rng.small_rational();
            L(2, 0) = rng.small_rational();
            L(2, 1) = rng.small_rational();
        }
        h.set_part(HomogeneousVF::linear(L));
        for (int d = 2; d <= k; ++d) h.set_part(reynolds_reversible(random_hvf(rng, n, d), g));
        ok = verify_containment(h, k, g);
    }
    // negative control: drop one transversal vector on the diag(1,-1) example at k = 2
    if (ok) {
        TruncatedVF h = TruncatedVF::from_linear(diag({1, -1}), 2);
        TransversalReport r = complete_transversal(h);
        ok = r.degree == 3 && r.transversal_dim == 2 && r.contained;
        if (ok) {
            RatMatrix dropped(1, r.W.basis().cols());
            dropped.set_row(0, r.W.basis().row(1));
            const SumResult weakened = subspace_sum(Subspace::span_of_rows(dropped), r.tangent);
            ok = !weakened.sum.contains(Subspace::full(r.W.ambient_dim()));
        }
    }
    criterion(7, "containment theorems and corrupted-transversal control", ok,
              "50 nonsymmetric + 25 reversible jets");
}

// 8. Normal-form reduction: scalar linearization, bit-exact replay,
//    reversible membership at every stage.
void criterion8() {
    bool ok = true;
    {
        TruncatedVF h(1, 2);
        h.add_term(0, Exponents{1}, 1);
        h.add_term(0, Exponents{2}, 1);
        const ReductionResult r = reduce(h, 4);
        ok = r.g == TruncatedVF::from_linear(RatMatrix::identity(1), 4);
    }
    Rng rng(20260108);
    for (int iter = 0; iter < 20 && ok; ++iter) {
        const size_t n = 2;
        const int N = 4;
        TruncatedVF h(n, N);
        for (int d = 1; d <= N; ++d) h.set_part(random_hvf(rng, n, d));
        const ReductionResult r = reduce(h, N);
        TruncatedVF replay = h.with_max_degree(N);
        for (const auto& xi : r.xis)
            if (!xi.is_zero()) replay = pushforward(replay, xi, N);
        ok = replay == r.g;
        for (bool flag : r.certificate) ok = ok && flag;
    }
    if (ok) {
        const SignedGroup g = z2_reversing();
        for (int iter = 0; iter < 5 && ok; ++iter) {
            const int N = 4;
            TruncatedVF h(2, N);
            h.set_part(HomogeneousVF::linear(kBogdanovTakens));
            for (int d = 2; d <= N; ++d) h.set_part(reynolds_reversible(random_hvf(rng, 2, d), g));
            const ReductionResult r = reduce(h, N, g);
            TruncatedVF cur = h;
            for (const auto& xi : r.xis) {
                ok = ok && is_equivariant(xi, g);
                if (!xi.is_zero()) cur = pushforward(cur, xi, N);
                ok = ok && is_rev_equivariant(cur, g);
            }
            ok = ok && cur == r.g;
        }
    }
    criterion(8, "normal-form reduction, replay and symmetry preservation", ok);
}

// 9. CLI determinism on the two worked inputs: byte-identical reports across
//    repeated runs, each under a second.
void criterion9() {
    namespace fs = std::filesystem;
    const std::string cli = NFCT_CLI_PATH;
    const std::string data = NFCT_DATA_DIR;
    const fs::path tmp = fs::temp_directory_path();
    bool ok = fs::exists(cli);
    double worst = 0.0;
    const std::vector<std::pair<std::string, std::string>> runs = {
        {"transversal", data + "/bogdanov_takens.json"},
        {"verify", data + "/bogdanov_takens.json"},
        {"transversal", data + "/bogdanov_takens_reversible.json"},
        {"verify", data + "/bogdanov_takens_reversible.json"},
    };
    for (size_t i = 0; i < runs.size() && ok; ++i) {
        std::vector<std::string> outputs;
        for (int rep = 0; rep < 2 && ok; ++rep) {
            const fs::path out =
                tmp / ("nfct_acceptance_" + std::to_string(i) + "_" + std::to_string(rep) + ".json");
            const std::string cmd =
                cli + " " + runs[i].first + " " + runs[i].second + " --output " + out.string();
            const auto start = std::chrono::steady_clock::now();
            const int rc = std::system(cmd.c_str());
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            worst = std::max(worst, secs);
            ok = rc == 0 && secs < 1.0;
            if (ok) {
                std::ifstream in(out, std::ios::binary);
                std::ostringstream buf;
                buf << in.rdbuf();
                outputs.push_back(buf.str());
                ok = !outputs.back().empty();
            }
            fs::remove(out);
        }
        ok = ok && outputs.size() == 2 && outputs[0] == outputs[1];
    }
    std::ostringstream detail;
    detail << "worst run " << worst << " s";
    criterion(9, "CLI reports are byte-identical across runs", ok, detail.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0) {
        std::printf("all 9 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
