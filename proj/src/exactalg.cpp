#include "jackd/exactalg.hpp"

#include <json.hpp>

#include <stdexcept>

namespace jackd {

AlphaPoly::AlphaPoly(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

AlphaPoly::AlphaPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

AlphaPoly AlphaPoly::variable() { return AlphaPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

AlphaPoly AlphaPoly::linear(Rat slope, Rat constant) {
    return AlphaPoly(std::vector<Rat>{std::move(constant), std::move(slope)});
}

void AlphaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat AlphaPoly::eval(const Rat& a) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly r(*this);
    for (Rat& x : r.c_) x = -x;
    return r;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

AlphaPoly AlphaPoly::operator+(const AlphaPoly& o) const {
    AlphaPoly r(*this);
    r += o;
    return r;
}

AlphaPoly AlphaPoly::operator-(const AlphaPoly& o) const {
    AlphaPoly r(*this);
    r -= o;
    return r;
}

AlphaPoly AlphaPoly::operator*(const AlphaPoly& o) const {
    if (is_zero() || o.is_zero()) return AlphaPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return AlphaPoly(std::move(r));
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) { return *this = *this * o; }

AlphaPoly AlphaPoly::operator*(const Rat& s) const {
    AlphaPoly r(*this);
    for (Rat& x : r.c_) x *= s;
    r.trim();
    return r;
}

AlphaPoly AlphaPoly::div_exact_alpha_power(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (static_cast<int>(c_.size()) <= k)
        throw std::domain_error("inexact division by power of the parameter");
    for (int i = 0; i < k; ++i)
        if (c_[i] != 0)
            throw std::domain_error("inexact division by power of the parameter");
    return AlphaPoly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

std::string AlphaPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const bool neg = c_[k] < 0;
        Rat mag = neg ? Rat(-c_[k]) : c_[k];
        std::string term = jackd::to_string(mag);
        if (k > 0) term += "*a^" + std::to_string(k);
        if (first) {
            out += (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

std::string AlphaPoly::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& x : c_) coeffs.push_back(jackd::to_string(x));
    nlohmann::json j;
    j["coeffs"] = coeffs;
    return j.dump();
}

AlphaPoly AlphaPoly::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<Rat> coeffs;
    for (const auto& item : j.at("coeffs"))
        coeffs.push_back(parse_rational(item.get<std::string>()));
    return AlphaPoly(std::move(coeffs));
}

XPoly::XPoly(std::vector<AlphaPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::constant(AlphaPoly c) { return XPoly(std::vector<AlphaPoly>{std::move(c)}); }

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlphaPoly XPoly::eval(const Rat& x) const {
    AlphaPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

XPoly XPoly::operator+(const XPoly& o) const {
    std::vector<AlphaPoly> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return XPoly(std::move(r));
}

XPoly XPoly::operator*(const XPoly& o) const {
    if (is_zero() || o.is_zero()) return XPoly();
    std::vector<AlphaPoly> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return XPoly(std::move(r));
}

XPoly XPoly::times_linear(const AlphaPoly& c1, const AlphaPoly& c0) const {
    return *this * XPoly(std::vector<AlphaPoly>{c0, c1});
}

XPoly XPoly::shift_by_one() const {
    // x^k -> (x+1)^k expanded with binomial coefficients.
    std::vector<AlphaPoly> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        for (std::size_t i = 0; i <= k; ++i)
            r[i] += c_[k] * Rat(binomial(static_cast<int>(k), static_cast<int>(i)));
    }
    return XPoly(std::move(r));
}

AlphaPoly forward_difference(const XPoly& p, int k) {
    if (k < 0) throw std::domain_error("forward_difference: negative order");
    if (k > p.degree()) return AlphaPoly();
    AlphaPoly acc;
    for (int i = 0; i <= k; ++i) {
        AlphaPoly term = p.eval(Rat(i)) * Rat(binomial(k, i));
        if ((k - i) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

std::vector<Rat> newton_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("newton_interpolate: duplicate abscissa");
    if (n == 0) return {};
    // Divided differences in place.
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    // Assemble sum dd[j] * prod_{i<j} (x - x_i).
    std::vector<Rat> result{dd[0]};
    std::vector<Rat> basis{Rat(1)};
    for (std::size_t j = 1; j < n; ++j) {
        // basis *= (x - x_{j-1})
        basis.push_back(Rat(0));
        for (std::size_t i = basis.size() - 1; i >= 1; --i)
            basis[i] = basis[i - 1] - points[j - 1].first * basis[i];
        basis[0] = -points[j - 1].first * basis[0];
        if (result.size() < basis.size()) result.resize(basis.size(), Rat(0));
        for (std::size_t i = 0; i < basis.size(); ++i) result[i] += dd[j] * basis[i];
    }
    while (!result.empty() && result.back() == 0) result.pop_back();
    return result;
}

Rat det_exact(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("det_exact: matrix not square");
    if (n == 0) return Rat(1);
    Rat prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Rat(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Rat(-m[n - 1][n - 1]);
}

std::vector<AlphaPoly> falling_factorial_expand(const XPoly& p) {
    std::vector<AlphaPoly> coeffs;
    XPoly cur = p;
    while (!cur.is_zero()) {
        const AlphaPoly c = cur.coeff(0);
        coeffs.push_back(c);
        // (cur - c) is divisible by x; divide, then peel one factor of the
        // parameter from every coefficient, then substitute x -> x + 1.
        std::vector<AlphaPoly> shifted;
        for (int k = 1; k <= cur.degree(); ++k)
            shifted.push_back(cur.coeff(k).div_exact_alpha_power(1));
        cur = XPoly(std::move(shifted)).shift_by_one();
    }
    if (coeffs.empty()) coeffs.push_back(AlphaPoly());
    return coeffs;
}

XPoly falling_factorial_assemble(const std::vector<AlphaPoly>& coeffs) {
    XPoly acc;
    XPoly basis = XPoly::constant(AlphaPoly(1));  // a^k x(x-1)...(x-k+1), k = 0
    const AlphaPoly a = AlphaPoly::variable();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) basis = basis.times_linear(a, a * Rat(-(static_cast<int>(k) - 1)));
        acc = acc + basis * XPoly::constant(coeffs[k]);
    }
    return acc;
}

}  // namespace jackd
