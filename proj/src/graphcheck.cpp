#include "jackd/graphcheck.hpp"

#include "jackd/colored.hpp"
#include "jackd/jack_oracle.hpp"
#include "jackd/partitions.hpp"
#include "jackd/spectra.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace jackd {

DenseGraph::DenseGraph(int vertices)
    : n_(vertices),
      words_((static_cast<std::size_t>(vertices) + 63) / 64),
      bits_(words_ * static_cast<std::size_t>(vertices), 0) {}

void DenseGraph::add_edge(int i, int j) {
    if (i == j) throw std::domain_error("add_edge: loops not allowed");
    bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= 1ull << (j & 63);
    bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= 1ull << (i & 63);
}

long DenseGraph::degree(int i) const {
    long d = 0;
    for (std::size_t w = 0; w < words_; ++w)
        d += __builtin_popcountll(bits_[static_cast<std::size_t>(i) * words_ + w]);
    return d;
}

DenseGraph build_perm_derangement_graph(int n) {
    if (n < 1 || n > 7)
        throw std::length_error("perm derangement graph: n out of range");
    std::vector<std::vector<int>> verts;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        verts.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    DenseGraph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            bool disjoint = true;
            for (int s = 0; s < n; ++s)
                if (verts[i][s] == verts[j][s]) {
                    disjoint = false;
                    break;
                }
            if (disjoint) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    // Regularity sanity: every vertex sees exactly the derangement count.
    const Int expected = rencontres(n, 0, Rat(1)).get_num();
    for (int i = 0; i < g.vertices(); ++i)
        if (Int(g.degree(i)) != expected)
            throw std::runtime_error("perm derangement graph: degree mismatch");
    return g;
}

DenseGraph build_matching_derangement_graph(int n) {
    if (n < 1 || n > 6)
        throw std::length_error("matching derangement graph: n out of range");
    std::vector<std::vector<int>> verts;
    std::vector<int> partner(2 * n, -1);
    // Enumerate partner arrays in lexicographic order.
    auto rec = [&](auto&& self) -> void {
        int a = 0;
        while (a < 2 * n && partner[a] >= 0) ++a;
        if (a == 2 * n) {
            verts.push_back(partner);
            return;
        }
        for (int b = a + 1; b < 2 * n; ++b) {
            if (partner[b] >= 0) continue;
            partner[a] = b;
            partner[b] = a;
            self(self);
            partner[a] = -1;
            partner[b] = -1;
        }
    };
    rec(rec);
    DenseGraph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            bool disjoint = true;
            for (int s = 0; s < 2 * n; ++s)
                if (verts[i][s] == verts[j][s]) {
                    disjoint = false;
                    break;
                }
            if (disjoint) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    const Int expected = matching_derangement_count(n);
    for (int i = 0; i < g.vertices(); ++i)
        if (Int(g.degree(i)) != expected)
            throw std::runtime_error("matching derangement graph: degree mismatch");
    return g;
}

std::vector<double> spectrum_numeric(const DenseGraph& g) {
    const int n = g.vertices();
    if (n > 12000) throw std::length_error("spectrum_numeric: too many vertices");
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum_numeric: eigensolver failed");
    std::vector<double> eigs(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + n);
    std::sort(eigs.begin(), eigs.end());
    const double trace = std::accumulate(eigs.begin(), eigs.end(), 0.0);
    if (std::abs(trace) > 1e-6 * n)
        throw std::runtime_error("spectrum_numeric: trace check failed");
    return eigs;
}

SpectrumReport verify_spectrum(int n, int alpha) {
    if (alpha != 1 && alpha != 2)
        throw std::domain_error("verify_spectrum: alpha must be 1 or 2");
    const DenseGraph g = (alpha == 1) ? build_perm_derangement_graph(n)
                                      : build_matching_derangement_graph(n);
    const std::vector<double> eigs = spectrum_numeric(g);

    // Exact values grouped by eigenvalue; shapes sharing one are merged.
    std::map<Rat, Int> expected;
    for (const Partition& lam : partitions_of(n)) {
        const Rat value = eta_at(lam, Rat(alpha));
        const Int mult = (alpha == 1) ? syt_count(lam) * syt_count(lam)
                                      : syt_count(double_partition(lam));
        expected[value] += mult;
    }

    SpectrumReport report;
    report.n = n;
    report.alpha = alpha;
    report.vertices = g.vertices();
    const double rel_tol = (alpha == 1) ? 1e-8 : 1e-6;
    long matched = 0;
    bool all_ok = true;
    for (const auto& [value, mult] : expected) {
        SpectrumCheckEntry entry;
        entry.eta = to_string(value);
        entry.expected_mult = mult;
        const double v = value.get_d();
        const double tol = rel_tol * std::max(1.0, std::abs(v));
        for (double e : eigs) {
            if (std::abs(e - v) <= tol) {
                entry.found_mult += 1;
                entry.max_residual = std::max(entry.max_residual, std::abs(e - v));
            }
        }
        matched += entry.found_mult;
        if (Int(entry.found_mult) != entry.expected_mult) all_ok = false;
        report.entries.push_back(std::move(entry));
    }
    report.pass = all_ok && matched == g.vertices();
    return report;
}

std::string SpectrumReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["alpha"] = alpha;
    j["vertices"] = vertices;
    j["pass"] = pass;
    nlohmann::json entries_json = nlohmann::json::array();
    for (const SpectrumCheckEntry& e : entries) {
        nlohmann::json ej;
        ej["eta"] = e.eta;
        ej["expected_mult"] = to_string(e.expected_mult);
        ej["found_mult"] = e.found_mult;
        ej["max_residual"] = e.max_residual;
        entries_json.push_back(std::move(ej));
    }
    j["per_eigenvalue"] = entries_json;
    return j.dump();
}

}  // namespace jackd
