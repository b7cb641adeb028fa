#include "jackd/jack_oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jackd {

SymFuncExpansion power_to_monomial(const Partition& mu) {
    if (mu.size() > 10) throw std::length_error("power_to_monomial: size exceeds cap");
    SymFuncExpansion f;
    f.n = mu.size();
    f.basis = SymBasis::Monomial;
    std::map<Partition, Rat> cur;
    cur[Partition()] = Rat(1);
    for (int k : mu.parts()) {
        std::map<Partition, Rat> next;
        for (const auto& [nu, c] : cur) {
            // Multiply the monomial m_nu by p_k: add k to one distinct part
            // value of nu, or append a new part k. The coefficient picks up
            // the multiplicity of the enlarged part in the result.
            std::vector<int> values{0};
            for (int v : nu.parts())
                if (values.back() != v) values.push_back(v);
            for (int v : values) {
                std::vector<int> parts = nu.parts();
                if (v == 0) {
                    parts.push_back(k);
                } else {
                    auto it = std::find(parts.begin(), parts.end(), v);
                    *it = v + k;
                }
                std::sort(parts.begin(), parts.end(), std::greater<int>());
                Partition out(std::move(parts));
                const long mult =
                    std::count(out.parts().begin(), out.parts().end(), v + k);
                next[out] += c * Rat(mult);
            }
        }
        cur = std::move(next);
    }
    f.coeffs = std::move(cur);
    return f;
}

namespace {

Rat inner_product(const std::map<Partition, Rat>& u,
                  const std::map<Partition, Rat>& v, const Rat& alpha) {
    Rat acc(0);
    for (const auto& [nu, cu] : u) {
        const auto it = v.find(nu);
        if (it == v.end()) continue;
        Rat weight = Rat(z_factor(nu));
        for (int i = 0; i < nu.length(); ++i) weight *= alpha;
        acc += cu * it->second * weight;
    }
    return acc;
}

}  // namespace

std::map<Partition, std::map<Partition, Rat>> jack_power_expansions(int n,
                                                                    const Rat& alpha) {
    if (n > 7) throw std::length_error("jack_power_expansions: size exceeds cap");
    if (alpha == 0)
        throw std::domain_error("jack_power_expansions: degenerate parameter");
    const std::vector<Partition> desc = partitions_of(n);

    // p_mu in the monomial basis, and its inverse by forward substitution in
    // reverse-lexicographic order (p's transition matrix is unitriangular up
    // to the multiplicity factor on the diagonal).
    std::map<Partition, std::map<Partition, Rat>> p_in_m, m_in_p;
    for (const Partition& mu : desc) p_in_m[mu] = power_to_monomial(mu).coeffs;
    for (const Partition& nu : desc) {
        const Rat diag = p_in_m[nu][nu];
        std::map<Partition, Rat> acc;
        acc[nu] = Rat(1);
        for (const auto& [tau, a] : p_in_m[nu]) {
            if (tau == nu) continue;
            for (const auto& [pi, b] : m_in_p[tau]) acc[pi] -= a * b;
        }
        for (auto& [pi, c] : acc) c /= diag;
        m_in_p[nu] = std::move(acc);
    }

    std::map<Partition, std::map<Partition, Rat>> theta;
    std::map<Partition, Rat> norms;
    std::vector<Partition> asc(desc.rbegin(), desc.rend());
    std::vector<Partition> done;
    for (const Partition& lam : asc) {
        std::map<Partition, Rat> v = m_in_p[lam];
        for (const Partition& mu : done) {
            const Rat num = inner_product(v, theta[mu], alpha);
            if (num == 0) continue;
            const Rat ratio = num / norms[mu];
            for (const auto& [nu, c] : theta[mu]) v[nu] -= ratio * c;
        }
        // Normalize so the monomial coefficient at (1^n) equals n!.
        Rat unit(0);
        const Partition ones = (n == 0) ? Partition() : Partition(std::vector<int>(n, 1));
        for (const auto& [mu, c] : v) {
            const auto& row = p_in_m[mu];
            const auto it = row.find(ones);
            if (it != row.end()) unit += c * it->second;
        }
        if (unit == 0)
            throw std::domain_error("jack_power_expansions: degenerate parameter");
        const Rat scale = Rat(factorial(n)) / unit;
        for (auto& [nu, c] : v) c *= scale;
        for (auto it = v.begin(); it != v.end();)
            it = (it->second == 0) ? v.erase(it) : std::next(it);
        const Rat norm = inner_product(v, v, alpha);
        if (norm == 0)
            throw std::domain_error("jack_power_expansions: degenerate parameter");
        norms[lam] = norm;
        theta[lam] = std::move(v);
        done.push_back(lam);
    }
    return theta;
}

SymFuncExpansion jack_in_power_basis(const Partition& lam, const Rat& alpha) {
    auto family = jack_power_expansions(lam.size(), alpha);
    SymFuncExpansion f;
    f.n = lam.size();
    f.basis = SymBasis::PowerSum;
    f.coeffs = std::move(family.at(lam));
    return f;
}

SymFuncExpansion to_monomial_basis(const SymFuncExpansion& f) {
    if (f.basis == SymBasis::Monomial) return f;
    SymFuncExpansion out;
    out.n = f.n;
    out.basis = SymBasis::Monomial;
    for (const auto& [mu, c] : f.coeffs) {
        const SymFuncExpansion pm = power_to_monomial(mu);
        for (const auto& [nu, d] : pm.coeffs) {
            out.coeffs[nu] += c * d;
        }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
    return out;
}

Rat eta_from_jack_expansion(const Partition& lam, const Rat& alpha) {
    const SymFuncExpansion f = jack_in_power_basis(lam, alpha);
    Rat acc(0);
    for (const auto& [mu, c] : f.coeffs)
        if (fixed_point_free(mu)) acc += c;
    return acc;
}

namespace {

// Border-strip recursion state: remaining shape plus position in the class
// partition. First-column hook lengths ("beta sets") make strip removal a
// single-element move.
using MnMemo = std::map<std::pair<std::vector<int>, std::size_t>, Int>;

Int mn_rec(const std::vector<int>& beta, const std::vector<int>& mu,
           std::size_t idx, MnMemo& memo) {
    if (idx == mu.size()) return 1;
    const auto key = std::make_pair(beta, idx);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int k = mu[idx];
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - k;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int passed = 0;
        std::vector<int> next = beta;
        next[i] = target;
        for (int b : beta)
            if (b < beta[i] && b > target) ++passed;
        std::sort(next.begin(), next.end(), std::greater<int>());
        const Int sub = mn_rec(next, mu, idx + 1, memo);
        total += (passed % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

std::vector<int> beta_set(const Partition& lam) {
    const int len = lam.length();
    std::vector<int> beta(len);
    for (int i = 1; i <= len; ++i) beta[i - 1] = lam.part(i) + len - i;
    return beta;
}

}  // namespace

Int symmetric_group_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::domain_error("character: partitions of different sizes");
    if (lam.size() > 14) throw std::length_error("character: size exceeds cap");
    if (lam.empty()) return 1;
    MnMemo memo;
    return mn_rec(beta_set(lam), mu.parts(), 0, memo);
}

CharacterTable CharacterTable::build(int n) {
    if (n > 14) throw std::length_error("character table: size exceeds cap");
    CharacterTable t;
    t.n_ = n;
    t.classes_ = partitions_of(n);
    for (std::size_t i = 0; i < t.classes_.size(); ++i)
        t.index_[t.classes_[i]] = static_cast<int>(i);
    t.chi_.assign(t.classes_.size(), std::vector<Int>(t.classes_.size()));
    // One memo per class: the recursion only depends on the remaining shape
    // and the class suffix, so it is shared across all row shapes.
    for (std::size_t j = 0; j < t.classes_.size(); ++j) {
        MnMemo memo;
        for (std::size_t i = 0; i < t.classes_.size(); ++i)
            t.chi_[i][j] = n == 0 ? Int(1)
                                  : mn_rec(beta_set(t.classes_[i]),
                                           t.classes_[j].parts(), 0, memo);
    }
    return t;
}

Int CharacterTable::chi(const Partition& lam, const Partition& mu) const {
    return chi_[index_.at(lam)][index_.at(mu)];
}

Int CharacterTable::class_size(const Partition& mu) const {
    return jackd::class_size(mu);
}

Int CharacterTable::dimension(const Partition& lam) const {
    const Partition ones =
        (n_ == 0) ? Partition() : Partition(std::vector<int>(n_, 1));
    return chi(lam, ones);
}

bool CharacterTable::orthogonality_holds() const {
    const std::size_t p = classes_.size();
    const Int order = factorial(n_);
    // Row orthogonality: sum_mu |C_mu| chi^lam(mu) chi^nu(mu) = n! delta.
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b) {
            Int acc = 0;
            for (std::size_t j = 0; j < p; ++j)
                acc += jackd::class_size(classes_[j]) * chi_[a][j] * chi_[b][j];
            if (acc != (a == b ? order : Int(0))) return false;
        }
    // Column orthogonality: sum_lam chi^lam(mu) chi^lam(nu) = z_mu delta.
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b) {
            Int acc = 0;
            for (std::size_t i = 0; i < p; ++i) acc += chi_[i][a] * chi_[i][b];
            if (acc != (a == b ? z_factor(classes_[a]) : Int(0))) return false;
        }
    return true;
}

std::string CharacterTable::to_json() const {
    nlohmann::json j;
    j["format"] = 1;
    j["n"] = n_;
    nlohmann::json classes = nlohmann::json::array();
    for (const Partition& p : classes_) classes.push_back(p.to_string());
    j["classes"] = classes;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : chi_) {
        nlohmann::json r = nlohmann::json::array();
        for (const Int& v : row) r.push_back(jackd::to_string(v));
        rows.push_back(r);
    }
    j["chi"] = rows;
    return j.dump();
}

CharacterTable CharacterTable::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.at("format").get<int>() != 1)
        throw std::invalid_argument("character table cache: unknown format");
    CharacterTable t;
    t.n_ = j.at("n").get<int>();
    for (const auto& s : j.at("classes"))
        t.classes_.push_back(Partition::parse(s.get<std::string>()));
    if (t.classes_ != partitions_of(t.n_))
        throw std::invalid_argument("character table cache: wrong class list");
    for (std::size_t i = 0; i < t.classes_.size(); ++i)
        t.index_[t.classes_[i]] = static_cast<int>(i);
    for (const auto& row : j.at("chi")) {
        std::vector<Int> r;
        for (const auto& v : row) r.emplace_back(v.get<std::string>());
        if (r.size() != t.classes_.size())
            throw std::invalid_argument("character table cache: ragged rows");
        t.chi_.push_back(std::move(r));
    }
    if (t.chi_.size() != t.classes_.size())
        throw std::invalid_argument("character table cache: wrong row count");
    return t;
}

CharacterTable CharacterTable::load_or_build(int n, const std::string& cache_dir) {
    if (cache_dir.empty()) return build(n);
    namespace fs = std::filesystem;
    const fs::path path = fs::path(cache_dir) / ("chartab_" + std::to_string(n) + ".json");
    if (fs::exists(path)) {
        try {
            std::ifstream in(path);
            std::stringstream buf;
            buf << in.rdbuf();
            CharacterTable t = from_json(buf.str());
            if (t.n() == n && t.orthogonality_holds()) return t;
        } catch (const std::exception&) {
            // Corrupt entries are recomputed below, never trusted.
        }
    }
    CharacterTable t = build(n);
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    if (!ec) {
        std::ofstream out(path);
        out << t.to_json();
    }
    return t;
}

Rat eta_from_character_sum(const Partition& lam, const std::string& cache_dir) {
    if (lam.size() > 12)
        throw std::length_error("eta_from_character_sum: size exceeds cap");
    if (lam.empty()) return Rat(1);
    const CharacterTable table = CharacterTable::load_or_build(lam.size(), cache_dir);
    Int acc = 0;
    for (const Partition& mu : table.classes())
        if (fixed_point_free(mu)) acc += table.class_size(mu) * table.chi(lam, mu);
    return Rat(acc) / Rat(table.dimension(lam));
}

Int syt_count(const Partition& lam) {
    Int hooks = 1;
    const Partition conj = lam.conjugate();
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c)
            hooks *= (lam.part(r) - c) + (conj.part(c) - r) + 1;
    return factorial(lam.size()) / hooks;
}

Int skew_syt_count(const Partition& lam, const Partition& mu) {
    if (!contains(lam, mu))
        throw std::domain_error("skew_syt_count: inner shape not contained");
    std::map<Partition, Int> memo;
    // Number of standard fillings of nu/mu, by removing outer corners.
    auto count = [&](auto&& self, const Partition& nu) -> Int {
        if (nu == mu) return 1;
        const auto it = memo.find(nu);
        if (it != memo.end()) return it->second;
        Int total = 0;
        for (int r = 1; r <= nu.length(); ++r) {
            if (nu.part(r) == nu.part(r + 1)) continue;
            std::vector<int> parts = nu.parts();
            parts[r - 1] -= 1;
            Partition smaller(std::move(parts));
            if (contains(smaller, mu)) total += self(self, smaller);
        }
        memo.emplace(nu, total);
        return total;
    };
    return count(count, lam);
}

Int z_factor(const Partition& mu) {
    Int z = 1;
    int run = 0;
    for (int i = 1; i <= mu.length(); ++i) {
        ++run;
        if (mu.part(i) != mu.part(i + 1)) {
            z *= pow_int(Int(mu.part(i)), run) * factorial(run);
            run = 0;
        }
    }
    return z;
}

Int class_size(const Partition& mu) { return factorial(mu.size()) / z_factor(mu); }

}  // namespace jackd
